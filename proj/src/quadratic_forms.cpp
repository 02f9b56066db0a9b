#include "quatnum/quadratic_forms.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace quatnum {

Integer form_value(const FormTuple& f, const IntQuad& x) {
  return f.a * x[0] * x[0] + f.b * x[1] * x[1] + f.c * x[2] * x[2] + f.d * x[3] * x[3];
}

Rational form_value(const FormTuple& f, const RatQuad& x) {
  Rational v = Rational(f.a) * x[0] * x[0] + Rational(f.b) * x[1] * x[1] +
               Rational(f.c) * x[2] * x[2] + Rational(f.d) * x[3] * x[3];
  return v;
}

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// all coefficients and n fit comfortably in 64 bits on this path
std::optional<std::array<std::uint64_t, 4>> represent_u64(std::uint64_t n,
                                                          std::uint64_t a,
                                                          std::uint64_t b,
                                                          std::uint64_t c,
                                                          std::uint64_t d) {
  for (std::uint64_t x4 = 0; d * x4 * x4 <= n; ++x4) {
    std::uint64_t r4 = n - d * x4 * x4;
    for (std::uint64_t x3 = 0; c * x3 * x3 <= r4; ++x3) {
      std::uint64_t r3 = r4 - c * x3 * x3;
      for (std::uint64_t x2 = 0; b * x2 * x2 <= r3; ++x2) {
        std::uint64_t r2 = r3 - b * x2 * x2;
        if (r2 % a != 0) continue;
        std::uint64_t q = r2 / a;
        std::uint64_t x1 = isqrt_u64(q);
        if (x1 * x1 == q) return std::array<std::uint64_t, 4>{x1, x2, x3, x4};
      }
    }
  }
  return std::nullopt;
}

constexpr std::uint64_t kU64SearchCeiling = std::uint64_t(1) << 60;

}  // namespace

std::optional<IntQuad> represent(const Integer& n, const FormTuple& f) {
  if (n < 0) throw std::invalid_argument("cannot represent a negative integer");
  if (n.fits_ulong_p() && n.get_ui() < kU64SearchCeiling && f.a.fits_ulong_p() &&
      f.b.fits_ulong_p() && f.c.fits_ulong_p() && f.d.fits_ulong_p()) {
    auto r = represent_u64(n.get_ui(), f.a.get_ui(), f.b.get_ui(), f.c.get_ui(),
                           f.d.get_ui());
    if (!r) return std::nullopt;
    return IntQuad{Integer((*r)[0]), Integer((*r)[1]), Integer((*r)[2]), Integer((*r)[3])};
  }
  for (Integer x4 = 0; f.d * x4 * x4 <= n; ++x4) {
    Integer r4 = n - f.d * x4 * x4;
    for (Integer x3 = 0; f.c * x3 * x3 <= r4; ++x3) {
      Integer r3 = r4 - f.c * x3 * x3;
      for (Integer x2 = 0; f.b * x2 * x2 <= r3; ++x2) {
        Integer r2 = r3 - f.b * x2 * x2;
        if (r2 % f.a != 0) continue;
        Integer q = r2 / f.a;
        if (is_perfect_square(q)) return IntQuad{isqrt(q), x2, x3, x4};
      }
    }
  }
  return std::nullopt;
}

UniversalityReport verify_universal(const FormTuple& f, const Integer& limit) {
  if (limit < 1) throw std::invalid_argument("verify_universal needs limit >= 1");
  if (limit > 10000000)
    throw std::invalid_argument("universality limit too large for the sieve");
  const std::uint64_t lim = limit.get_ui();
  // a coefficient above the limit forces its variable to zero, so clamping
  // keeps the answer identical and rules out u64 overflow below
  auto clamped = [&](const Integer& co) {
    return (co > limit) ? lim + 1 : co.get_ui();
  };
  const std::uint64_t a = clamped(f.a), b = clamped(f.b), c = clamped(f.c),
                      d = clamped(f.d);
  // every value b x2^2 + c x3^2 + d x4^2 <= lim
  std::vector<char> tail(lim + 1, 0);
  for (std::uint64_t x4 = 0; d * x4 * x4 <= lim; ++x4) {
    std::uint64_t s4 = d * x4 * x4;
    for (std::uint64_t x3 = 0; s4 + c * x3 * x3 <= lim; ++x3) {
      std::uint64_t s3 = s4 + c * x3 * x3;
      for (std::uint64_t x2 = 0; s3 + b * x2 * x2 <= lim; ++x2)
        tail[s3 + b * x2 * x2] = 1;
    }
  }
  for (std::uint64_t n = 1; n <= lim; ++n) {
    bool hit = false;
    for (std::uint64_t x1 = 0; a * x1 * x1 <= n; ++x1) {
      if (tail[n - a * x1 * x1]) {
        hit = true;
        break;
      }
    }
    if (!hit) return {false, Integer(static_cast<unsigned long>(n))};
  }
  return {true, std::nullopt};
}

const std::vector<std::pair<Integer, Integer>>& universal_norm_pairs() {
  static const std::vector<std::pair<Integer, Integer>> pairs = {
      {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {2, 5}};
  return pairs;
}

const std::vector<FormTuple>& liouville_pepin_forms() {
  static const std::vector<FormTuple> forms = {
      {1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 2, 2}, {1, 1, 1, 4},
      {1, 1, 2, 4}, {1, 2, 2, 4}, {1, 2, 4, 4}, {1, 1, 2, 8},
      {1, 2, 4, 8}, {1, 1, 3, 3}, {1, 2, 5, 10}};
  return forms;
}

RatQuad represent_rational(const Rational& m, const Integer& b, const Integer& c) {
  if (m <= 0) throw std::invalid_argument("represent_rational needs m > 0");
  bool known = false;
  for (const auto& [pb, pc] : universal_norm_pairs())
    if (pb == b && pc == c) known = true;
  if (!known)
    throw std::invalid_argument(
        "(b, c) outside the universal list; norm surjectivity not guaranteed");
  Integer num = numerator(m);
  Integer den = denominator(m);
  auto rep = represent(num * den, FormTuple(1, b, c, b * c));
  if (!rep)
    throw std::logic_error("universal form failed to represent an integer");
  return RatQuad{make_rational((*rep)[0], den), make_rational((*rep)[1], den),
                 make_rational((*rep)[2], den), make_rational((*rep)[3], den)};
}

IntQuad compose(const IntQuad& x, const IntQuad& y, ComposeVariant variant) {
  const Integer &x1 = x[0], &x2 = x[1], &x3 = x[2], &x4 = x[3];
  const Integer &y1 = y[0], &y2 = y[1], &y3 = y[2], &y4 = y[3];
  if (variant == ComposeVariant::Direct) {
    return IntQuad{x1 * y1 - x2 * y2 - 2 * x3 * y3 - 2 * x4 * y4,
                   x1 * y2 + x2 * y1 + 2 * x3 * y4 - 2 * x4 * y3,
                   x1 * y3 + x3 * y1 - x2 * y4 + x4 * y2,
                   x1 * y4 + x4 * y1 + x2 * y3 - x3 * y2};
  }
  return IntQuad{x1 * y1 + x2 * y2 + 2 * x3 * y3 + 2 * x4 * y4,
                 x1 * y2 - x2 * y1 + 2 * x3 * y4 - 2 * x4 * y3,
                 x1 * y3 - x3 * y1 - x2 * y4 + x4 * y2,
                 x1 * y4 - x4 * y1 + x2 * y3 - x3 * y2};
}

}  // namespace quatnum
