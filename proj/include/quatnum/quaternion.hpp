#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "quatnum/gaussian.hpp"
#include "quatnum/scalars.hpp"

namespace quatnum {

enum class BaseField { Q, Qi };

/// Parameters (b, c) of the generalized quaternion algebra H(-b,-c) over the
/// base field, with basis {1, e2, e3, e4} multiplying by
///
///        |  e2      e3      e4
///   -----+---------------------------
///    e2  | -b       e4     -b*e3
///    e3  | -e4     -c       c*e2
///    e4  |  b*e3   -c*e2   -b*c
///
/// Only positive b, c are accepted.
struct AlgebraParams {
  Integer b;
  Integer c;
  BaseField field;

  AlgebraParams(Integer b_, Integer c_, BaseField f = BaseField::Q)
      : b(std::move(b_)), c(std::move(c_)), field(f) {
    if (b < 1 || c < 1)
      throw std::invalid_argument("algebra parameters b, c must be positive");
  }

  friend bool operator==(const AlgebraParams& x, const AlgebraParams& y) {
    return x.b == y.b && x.c == y.c && x.field == y.field;
  }
};

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr BaseField field = BaseField::Q;
  static Rational from_integer(const Integer& z) { return Rational(z); }
  static bool is_zero(const Rational& s) { return s == 0; }
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr BaseField field = BaseField::Qi;
  static GaussianRational from_integer(const Integer& z) {
    return GaussianRational(Rational(z));
  }
  static bool is_zero(const GaussianRational& s) { return s.is_zero(); }
};

/// Quaternion x1 + x2*e2 + x3*e3 + x4*e4 with exact scalar coordinates.
/// Values are immutable; every operation returns a fresh value. Binary
/// operations require identical algebra parameters.
template <typename S>
class Quaternion {
 public:
  using Scalar = S;

  explicit Quaternion(AlgebraParams params)
      : params_(std::move(params)), co_{S{}, S{}, S{}, S{}} {
    check_field();
  }

  Quaternion(AlgebraParams params, S x1, S x2, S x3, S x4)
      : params_(std::move(params)),
        co_{std::move(x1), std::move(x2), std::move(x3), std::move(x4)} {
    check_field();
  }

  Quaternion(AlgebraParams params, std::array<S, 4> coords)
      : params_(std::move(params)), co_(std::move(coords)) {
    check_field();
  }

  static Quaternion one(const AlgebraParams& params) {
    return Quaternion(params, ScalarTraits<S>::from_integer(1), S{}, S{}, S{});
  }

  const AlgebraParams& params() const { return params_; }
  const std::array<S, 4>& coords() const { return co_; }
  const S& x1() const { return co_[0]; }
  const S& x2() const { return co_[1]; }
  const S& x3() const { return co_[2]; }
  const S& x4() const { return co_[3]; }

  bool is_zero() const {
    for (const auto& c : co_)
      if (!ScalarTraits<S>::is_zero(c)) return false;
    return true;
  }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.params_ == y.params_ && x.co_ == y.co_;
  }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    x.check_same(y);
    return Quaternion(x.params_, x.co_[0] + y.co_[0], x.co_[1] + y.co_[1],
                      x.co_[2] + y.co_[2], x.co_[3] + y.co_[3]);
  }

  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    x.check_same(y);
    return Quaternion(x.params_, x.co_[0] - y.co_[0], x.co_[1] - y.co_[1],
                      x.co_[2] - y.co_[2], x.co_[3] - y.co_[3]);
  }

  friend Quaternion operator-(const Quaternion& x) {
    return Quaternion(x.params_, -x.co_[0], -x.co_[1], -x.co_[2], -x.co_[3]);
  }

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    x.check_same(y);
    const S b = ScalarTraits<S>::from_integer(x.params_.b);
    const S c = ScalarTraits<S>::from_integer(x.params_.c);
    const S& x1 = x.co_[0];
    const S& x2 = x.co_[1];
    const S& x3 = x.co_[2];
    const S& x4 = x.co_[3];
    const S& y1 = y.co_[0];
    const S& y2 = y.co_[1];
    const S& y3 = y.co_[2];
    const S& y4 = y.co_[3];
    S u1 = x1 * y1 - b * (x2 * y2) - c * (x3 * y3) - b * c * (x4 * y4);
    S u2 = x1 * y2 + x2 * y1 + c * (x3 * y4) - c * (x4 * y3);
    S u3 = x1 * y3 + x3 * y1 - b * (x2 * y4) + b * (x4 * y2);
    S u4 = x1 * y4 + x4 * y1 + x2 * y3 - x3 * y2;
    return Quaternion(x.params_, std::move(u1), std::move(u2), std::move(u3),
                      std::move(u4));
  }

  Quaternion scale(const S& s) const {
    return Quaternion(params_, s * co_[0], s * co_[1], s * co_[2], s * co_[3]);
  }

  Quaternion conj() const {
    return Quaternion(params_, co_[0], -co_[1], -co_[2], -co_[3]);
  }

  S trace() const { return co_[0] + co_[0]; }

  /// n(x) = x1^2 + b*x2^2 + c*x3^2 + b*c*x4^2, the scalar part of x * conj(x).
  S norm() const {
    const S b = ScalarTraits<S>::from_integer(params_.b);
    const S c = ScalarTraits<S>::from_integer(params_.c);
    S n = co_[0] * co_[0] + b * (co_[1] * co_[1]) + c * (co_[2] * co_[2]) +
          b * c * (co_[3] * co_[3]);
    return n;
  }

  Quaternion inverse() const {
    S n = norm();
    if (ScalarTraits<S>::is_zero(n))
      throw std::domain_error("quaternion with zero norm is not invertible");
    S inv = ScalarTraits<S>::from_integer(1) / n;
    return conj().scale(inv);
  }

 private:
  void check_field() const {
    if (params_.field != ScalarTraits<S>::field)
      throw std::invalid_argument("scalar type does not match the base field tag");
  }
  void check_same(const Quaternion& y) const {
    if (!(params_ == y.params_))
      throw std::invalid_argument("mismatched algebra parameters");
  }

  AlgebraParams params_;
  std::array<S, 4> co_;
};

using RationalQuaternion = Quaternion<Rational>;
using GaussianQuaternion = Quaternion<GaussianRational>;

// Literal format "a + b*e2 + c*e3 + d*e4": rational coefficients, omitted
// terms are zero, bare "e2" means coefficient 1.
std::string to_string(const RationalQuaternion& q);
RationalQuaternion parse_quaternion(std::string_view text, const AlgebraParams& params);

}  // namespace quatnum
