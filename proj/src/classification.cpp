#include "quatnum/classification.hpp"

#include <algorithm>
#include <set>

namespace quatnum {

namespace {

// (p-adic valuation, unit part)
std::pair<unsigned long, Integer> split_valuation(Integer x, const Integer& p) {
  unsigned long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return {v, x};
}

int eps_mod2(const Integer& u) {  // (u-1)/2 mod 2, u odd
  Integer e = (u - 1) / 2;
  return mpz_odd_p(e.get_mpz_t()) ? 1 : 0;
}

int omega_mod2(const Integer& u) {  // (u^2-1)/8 mod 2, u odd
  Integer e = (u * u - 1) / 8;
  return mpz_odd_p(e.get_mpz_t()) ? 1 : 0;
}

std::vector<Integer> distinct_prime_divisors(Integer n) {
  std::vector<Integer> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

int hilbert_symbol(const Integer& b, const Integer& c, const Place& place) {
  if (b == 0 || c == 0)
    throw std::invalid_argument("Hilbert symbol needs nonzero arguments");
  if (place.infinite) return (b < 0 && c < 0) ? -1 : 1;
  const Integer& p = place.prime;
  if (p < 2 || !is_prime(p))
    throw std::invalid_argument("Hilbert symbol place must be prime or infinity");
  auto [alpha, u] = split_valuation(b, p);
  auto [beta, w] = split_valuation(c, p);
  if (p == 2) {
    unsigned long e = static_cast<unsigned long>(eps_mod2(u)) * eps_mod2(w) +
                      alpha * omega_mod2(w) + beta * omega_mod2(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  if ((alpha % 2) && (beta % 2) && eps_mod2(p)) s = -s;
  if (beta % 2) s *= legendre(u, p);
  if (alpha % 2) s *= legendre(w, p);
  return s;
}

ClassificationResult reduced_discriminant(const Integer& b, const Integer& c) {
  if (b < 1 || c < 1)
    throw std::invalid_argument("reduced_discriminant expects H_Q(-b,-c) with b, c >= 1");
  ClassificationResult res;
  res.reduced_discriminant = 1;
  for (const Integer& p : distinct_prime_divisors(2 * b * c)) {
    if (hilbert_symbol(-b, -c, Place::finite(p)) == -1) {
      res.ramified_primes.push_back(p);
      res.reduced_discriminant *= p;
    }
  }
  res.verdict = res.ramified_primes.empty() ? Verdict::Split : Verdict::Division;
  return res;
}

bool are_isomorphic(const AlgebraParams& a1, const AlgebraParams& a2) {
  if (a1.field != BaseField::Q || a2.field != BaseField::Q)
    throw std::invalid_argument("isomorphism testing is only supported over Q");
  return reduced_discriminant(a1.b, a1.c).reduced_discriminant ==
         reduced_discriminant(a2.b, a2.c).reduced_discriminant;
}

std::vector<std::array<Integer, 3>> conic_solutions(const Integer& m, long count) {
  if (m < 1) throw std::invalid_argument("conic_solutions needs m >= 1");
  if (count < 1) throw std::invalid_argument("conic_solutions needs count >= 1");
  std::vector<std::array<Integer, 3>> out;
  std::set<std::array<Integer, 3>> seen;
  for (Integer s = 1; static_cast<long>(out.size()) < count; ++s) {
    for (Integer a = 1; a <= s; ++a) {
      Integer bb = s - a;
      std::array<Integer, 3> t = {a * a - m * bb * bb, 2 * a * bb, a * a + m * bb * bb};
      if (seen.insert(t).second) {
        out.push_back(t);
        if (static_cast<long>(out.size()) == count) break;
      }
    }
  }
  return out;
}

bool verify_conic_point(const Integer& b, const Integer& c,
                        const std::array<GaussianRational, 3>& point) {
  if (point[0].is_zero() && point[1].is_zero() && point[2].is_zero()) return false;
  GaussianRational bb{Rational(b)};
  GaussianRational cc{Rational(c)};
  GaussianRational lhs = bb * (point[0] * point[0]) + cc * (point[1] * point[1]);
  return lhs == point[2] * point[2];
}

namespace {

struct GaussInt {
  Integer re, im;
  bool operator<(const GaussInt& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }
  bool is_zero() const { return re == 0 && im == 0; }
  Integer height() const {
    Integer a = re < 0 ? Integer(-re) : re;
    Integer b = im < 0 ? Integer(-im) : im;
    return a > b ? a : b;
  }
};

GaussInt gsquare(const GaussInt& z) { return {z.re * z.re - z.im * z.im, 2 * z.re * z.im}; }

// exact square roots of w in Z[i], lexicographically sorted
std::vector<GaussInt> gaussian_sqrt(const GaussInt& w) {
  std::vector<GaussInt> roots;
  auto push = [&](const Integer& r, const Integer& s) {
    GaussInt z{r, s};
    GaussInt sq = gsquare(z);
    if (sq.re == w.re && sq.im == w.im) roots.push_back(z);
  };
  if (w.is_zero()) {
    roots.push_back({0, 0});
    return roots;
  }
  if (w.im == 0) {
    if (is_perfect_square(w.re)) {
      Integer r = isqrt(w.re);
      push(r, 0);
      push(-r, 0);
    }
    Integer neg = -w.re;
    if (is_perfect_square(neg)) {
      Integer s = isqrt(neg);
      push(0, s);
      push(0, -s);
    }
  } else {
    Integer n2 = w.re * w.re + w.im * w.im;
    if (is_perfect_square(n2)) {
      Integer n = isqrt(n2);
      Integer twice_r2 = w.re + n;
      if (twice_r2 >= 0 && twice_r2 % 2 == 0 && is_perfect_square(twice_r2 / 2)) {
        Integer r = isqrt(twice_r2 / 2);
        if (r != 0 && w.im % (2 * r) == 0) {
          Integer s = w.im / (2 * r);
          push(r, s);
          push(-r, -s);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](const GaussInt& a, const GaussInt& b) {
                            return a.re == b.re && a.im == b.im;
                          }),
              roots.end());
  return roots;
}

}  // namespace

std::optional<std::array<GaussianRational, 3>> classify_over_gaussian(
    const Integer& b, const Integer& c, long search_bound) {
  if (b < 1 || c < 1)
    throw std::invalid_argument("classify_over_gaussian expects H_Qi(-b,-c) with b, c >= 1");
  if (search_bound < 0) throw std::invalid_argument("negative search bound");
  auto as_rational = [](const GaussInt& z) {
    return GaussianRational(Rational(z.re), Rational(z.im));
  };
  for (long h = 0; h <= search_bound; ++h) {
    std::vector<GaussInt> box;
    for (long re = -h; re <= h; ++re)
      for (long im = -h; im <= h; ++im) box.push_back({Integer(re), Integer(im)});
    for (const GaussInt& x : box) {
      GaussInt x2 = gsquare(x);
      for (const GaussInt& y : box) {
        GaussInt y2 = gsquare(y);
        GaussInt w{-b * x2.re - c * y2.re, -b * x2.im - c * y2.im};
        for (const GaussInt& z : gaussian_sqrt(w)) {
          if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
          Integer mh = x.height();
          if (y.height() > mh) mh = y.height();
          if (z.height() > mh) mh = z.height();
          if (mh != h) continue;  // handled in its own shell
          return std::array<GaussianRational, 3>{as_rational(x), as_rational(y),
                                                 as_rational(z)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace quatnum
