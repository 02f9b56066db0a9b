#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "quatnum/scalars.hpp"

namespace quatnum {

/// Diagonal quaternary form a x1^2 + b x2^2 + c x3^2 + d x4^2 with positive
/// integer coefficients.
struct FormTuple {
  Integer a, b, c, d;

  FormTuple(Integer a_, Integer b_, Integer c_, Integer d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a < 1 || b < 1 || c < 1 || d < 1)
      throw std::invalid_argument("form coefficients must be positive");
  }

  friend bool operator==(const FormTuple& f, const FormTuple& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d;
  }
};

using IntQuad = std::array<Integer, 4>;
using RatQuad = std::array<Rational, 4>;

Integer form_value(const FormTuple& f, const IntQuad& x);
Rational form_value(const FormTuple& f, const RatQuad& x);

/// First representation of n by f in the fixed search order (x4 outermost,
/// then x3, x2, each from 0 upward; x1 recovered from the remainder), all
/// coordinates nonnegative. An empty result is a proof of non-representability:
/// any solution satisfies coeff * x^2 <= n coordinatewise, and the search
/// covers that whole box.
std::optional<IntQuad> represent(const Integer& n, const FormTuple& f);

struct UniversalityReport {
  bool universal;
  std::optional<Integer> counterexample;  // least non-representable value
};

/// Checks that every 1 <= n <= limit is represented by f.
UniversalityReport verify_universal(const FormTuple& f, const Integer& limit);

/// The seven (b, c) pairs whose norm forms (1, b, c, bc) are universal, which
/// makes the norm of H_Q(-b,-c) surject onto the positive rationals.
const std::vector<std::pair<Integer, Integer>>& universal_norm_pairs();

/// The eleven classical Liouville/Pepin universal tuples.
const std::vector<FormTuple>& liouville_pepin_forms();

/// Writes a positive rational m = m'/l (lowest terms) as the value of
/// (1, b, c, bc) at rational arguments: represent m'*l integrally, then divide
/// each coordinate by l. Only the seven universal pairs are accepted.
RatQuad represent_rational(const Rational& m, const Integer& b, const Integer& c);

enum class ComposeVariant { Direct, Twisted };

/// Bilinear composition laws for the form x1^2 + x2^2 + 2 x3^2 + 2 x4^2:
/// the output u satisfies form(u) = form(x) * form(y) exactly. Direct is the
/// coordinate vector of the quaternion product x*y in H_Q(-1,-2); Twisted
/// flips signs so that the norm comes from the product of the twisted
/// factors (x1,-x2,-x3,x4) and (y1,y2,y3,-y4).
IntQuad compose(const IntQuad& x, const IntQuad& y, ComposeVariant variant);

}  // namespace quatnum
