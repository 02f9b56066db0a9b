#include "quatnum/scalars.hpp"

#include <array>
#include <cctype>

namespace quatnum {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_token(text))
    throw parse_error("bad integer literal: '" + std::string(text) + "'");
  if (text[0] == '+') text.remove_prefix(1);  // mpz_set_str rejects a leading '+'
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_tok = text.substr(slash + 1);
  if (!is_integer_token(den_tok) || den_tok[0] == '+' || den_tok[0] == '-')
    throw parse_error("bad rational literal: '" + std::string(text) + "'");
  Integer den = parse_integer(den_tok);
  if (den == 0)
    throw parse_error("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& mod) {
  if (mod <= 0) throw std::invalid_argument("mod_pow needs a positive modulus");
  if (exp < 0) throw std::invalid_argument("mod_pow needs a nonnegative exponent");
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

int legendre(const Integer& a, const Integer& p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("legendre symbol needs an odd prime modulus");
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (r == 0) return 0;
  Integer e = (p - 1) / 2;
  Integer s = mod_pow(r, e, p);
  return s == 1 ? 1 : -1;
}

namespace {

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d,
                          unsigned long s) {
  // returns true if a proves n composite
  Integer x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static const std::array<int, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer limit64("18446744073709551616");  // 2^64
  if (n < limit64) {
    // this witness set is a proven deterministic test below 2^64
    for (int a : small)
      if (miller_rabin_witness(n, a, d, s)) return false;
    return true;
  }
  // exact but slow; nothing in this library produces inputs this large
  Integer f = 41;
  while (f * f <= n) {
    if (n % f == 0) return false;
    f += 2;
  }
  return true;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace quatnum
