#include "quatnum/quaternion.hpp"

#include <vector>

namespace quatnum {

std::string to_string(const RationalQuaternion& q) {
  static const char* basis[4] = {"", "e2", "e3", "e4"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Rational& co = q.coords()[i];
    if (co == 0) continue;
    Rational mag = co < 0 ? Rational(-co) : co;
    std::string term;
    if (i == 0)
      term = to_string(mag);
    else if (mag == 1)
      term = basis[i];
    else
      term = to_string(mag) + "*" + basis[i];
    if (out.empty())
      out = (co < 0 ? "-" : "") + term;
    else
      out += (co < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

RationalQuaternion parse_quaternion(std::string_view text, const AlgebraParams& params) {
  std::array<Rational, 4> co{};
  // split into signed terms, whitespace insensitive
  std::vector<std::string> terms;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if ((ch == '+' || ch == '-') && !cur.empty()) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  if (!cur.empty()) terms.push_back(cur);
  if (terms.empty()) throw parse_error("empty quaternion literal");

  for (auto& t : terms) {
    int slot = 0;
    for (int i = 1; i < 4; ++i) {
      std::string tag = "e" + std::to_string(i + 1);
      if (t.size() >= tag.size() && t.compare(t.size() - tag.size(), tag.size(), tag) == 0) {
        slot = i;
        t.erase(t.size() - tag.size());
        if (!t.empty() && t.back() == '*') t.pop_back();
        if (t.empty() || t == "+" || t == "-") t += "1";
        break;
      }
    }
    Rational coeff = parse_rational(t);
    co[slot] = co[slot] + coeff;
  }
  return RationalQuaternion(params, co);
}

}  // namespace quatnum
