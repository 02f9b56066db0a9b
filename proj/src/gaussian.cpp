#include "quatnum/gaussian.hpp"

#include <vector>

namespace quatnum {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero in Q(i)");
  Rational n = b.norm();
  GaussianRational t = a * b.conj();
  return {t.re / n, t.im / n};
}

std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re != 0) out = to_string(z.re);
  if (z.im != 0) {
    Rational mag = z.im < 0 ? Rational(-z.im) : z.im;
    std::string term = (mag == 1) ? "i" : to_string(mag) + "*i";
    if (out.empty())
      out = (z.im < 0 ? "-" : "") + term;
    else
      out += (z.im < 0 ? "-" : "+") + term;
  }
  return out;
}

namespace {

// splits into signed terms at top-level +/-
std::vector<std::string> signed_terms(std::string_view s) {
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == ' ' || ch == '\t') continue;
    if ((ch == '+' || ch == '-') && !cur.empty()) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  if (!cur.empty()) terms.push_back(cur);
  return terms;
}

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
  auto terms = signed_terms(text);
  if (terms.empty()) throw parse_error("empty Gaussian rational literal");
  GaussianRational z;
  bool seen_re = false, seen_im = false;
  for (auto& t : terms) {
    bool imag = !t.empty() && t.back() == 'i';
    if (imag) {
      t.pop_back();
      if (!t.empty() && t.back() == '*') t.pop_back();
      if (t.empty() || t == "+" || t == "-") t += "1";
      if (seen_im) throw parse_error("repeated imaginary term in '" + std::string(text) + "'");
      z.im = parse_rational(t);
      seen_im = true;
    } else {
      if (seen_re) throw parse_error("repeated real term in '" + std::string(text) + "'");
      z.re = parse_rational(t);
      seen_re = true;
    }
  }
  return z;
}

}  // namespace quatnum
