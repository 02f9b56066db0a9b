#pragma once

#include <string>
#include <string_view>

#include "quatnum/scalars.hpp"

namespace quatnum {

/// Element of Q(i), kept as an exact pair of rationals with i^2 = -1.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(const Rational& r) : re(r) {}
  explicit GaussianRational(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
};

// "p/q+r/s*i" with either term optional; a lone "i" means the imaginary unit.
std::string to_string(const GaussianRational& z);
GaussianRational parse_gaussian(std::string_view text);

}  // namespace quatnum
