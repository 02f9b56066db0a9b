#include "quatnum/monoid.hpp"

namespace quatnum {

MonoidVariant monoid_variant_from_string(std::string_view name) {
  if (name == "add") return MonoidVariant::TruncatedAdd;
  if (name == "or") return MonoidVariant::ComponentwiseOr;
  throw parse_error("unknown monoid variant '" + std::string(name) + "'");
}

MonoidElement::MonoidElement(int k, std::uint64_t index) : k_(k), index_(index) {
  if (k < 1 || k > 24) throw std::invalid_argument("k must be in [1, 24]");
  if (index > top()) throw std::invalid_argument("element index out of range");
}

MonoidElement monoid_op(const MonoidElement& a, const MonoidElement& b,
                        MonoidVariant variant) {
  if (a.k() != b.k()) throw std::invalid_argument("elements of different monoids");
  if (variant == MonoidVariant::ComponentwiseOr)
    return MonoidElement(a.k(), a.index() | b.index());
  std::uint64_t sum = a.index() + b.index();
  return MonoidElement(a.k(), sum > a.top() ? a.top() : sum);
}

FibTrace fib_sequence(const MonoidElement& a, const MonoidElement& b,
                      MonoidVariant variant, std::size_t max_steps) {
  if (a.k() != b.k()) throw std::invalid_argument("elements of different monoids");
  if (max_steps == 0) max_steps = (std::size_t(1) << a.k()) + 4;
  if (max_steps < 2) throw std::invalid_argument("max_steps must be at least 2");

  std::vector<MonoidElement> terms = {a, b};
  auto stable = [&](std::size_t i) {
    return terms[i] == terms[i + 1] &&
           monoid_op(terms[i], terms[i], variant) == terms[i];
  };
  while (!stable(terms.size() - 2)) {
    if (terms.size() >= max_steps + 2)
      throw std::logic_error("sequence failed to stabilize within the step bound");
    terms.push_back(
        monoid_op(terms[terms.size() - 2], terms[terms.size() - 1], variant));
  }
  MonoidElement limit = terms.back();
  std::size_t t = terms.size() - 1;
  while (t > 0 && terms[t - 1] == limit) --t;
  return {std::move(terms), t, limit};
}

}  // namespace quatnum
