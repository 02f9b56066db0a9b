#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quatnum/quaternion.hpp"
#include "quatnum/scalars.hpp"

namespace quatnum {

enum class LatticeKind { Lipschitz, Hurwitz };

/// Integer point of one of the seven division algebras H_Q(-b,-c) with
/// universal norm form. Lipschitz points have integer coordinates in any of
/// the seven; Hurwitz points live in H_Q(-1,-1) and have all coordinates
/// integral or all in Z + 1/2.
class LatticePoint {
 public:
  static LatticePoint lipschitz(const AlgebraParams& params,
                                const std::array<Integer, 4>& coords);
  static LatticePoint hurwitz(const std::array<Rational, 4>& coords);
  static LatticePoint from_quaternion(const RationalQuaternion& value);

  const RationalQuaternion& value() const { return value_; }
  const AlgebraParams& params() const { return value_.params(); }
  LatticeKind kind() const { return kind_; }
  bool is_zero() const { return value_.is_zero(); }

  /// Integer coordinates; only valid for Lipschitz points.
  std::array<Integer, 4> integer_coords() const;

  Integer norm() const;
  LatticePoint conj() const { return LatticePoint(value_.conj(), kind_); }

  friend bool operator==(const LatticePoint& x, const LatticePoint& y) {
    return x.value_ == y.value_;
  }
  friend LatticePoint operator+(const LatticePoint& x, const LatticePoint& y);
  friend LatticePoint operator-(const LatticePoint& x, const LatticePoint& y);
  friend LatticePoint operator*(const LatticePoint& x, const LatticePoint& y);
  friend LatticePoint operator-(const LatticePoint& x) {
    return LatticePoint(-x.value_, x.kind_);
  }

 private:
  LatticePoint(RationalQuaternion value, LatticeKind kind)
      : value_(std::move(value)), kind_(kind) {}

  RationalQuaternion value_;
  LatticeKind kind_;
};

/// Division form n(y) x = gamma y + n(y) theta with n(theta) < n(y), valid in
/// every one of the seven algebras. theta comes from rounding the coordinates
/// of x conj(y) / n(y) to nearest integers (ties toward zero); when that
/// fails the norm bound, theta = 0 always satisfies the contract.
/// Returns (gamma, theta).
std::pair<LatticePoint, LatticePoint> divide_with_scaled_remainder(
    const LatticePoint& x, const LatticePoint& y);

/// Euclidean division x = gamma y + theta with n(theta) < n(y) for Lipschitz
/// quaternions in H_Q(-1,-1) and odd n(y). The odd norm rules out rounding
/// ties and makes the remainder bound strict. Returns (gamma, theta).
std::pair<LatticePoint, LatticePoint> right_divide(const LatticePoint& x,
                                                   const LatticePoint& y);

/// x == y (mod phi) on the right: x - y = theta * phi for Lipschitz theta.
bool is_right_congruent(const LatticePoint& x, const LatticePoint& y,
                        const LatticePoint& phi);

/// Number of distinct right-congruence classes mod phi among Lipschitz points
/// with coordinates in [0, box); equals n(phi)^2 once box >= n(phi).
Integer count_residues(const LatticePoint& phi, const Integer& box);

bool is_unit(const LatticePoint& q);

/// Irreducibility test: an integer quaternion is prime exactly when its norm
/// is a prime number (the norm is multiplicative and surjective).
bool is_prime_quaternion(const LatticePoint& q);

/// Element alpha + beta v of the commutative subring Z[v] of the Hurwitz
/// integers, where v = (1 + e2 + e3 + e4)/2 satisfies v^2 = v - 1. The ring
/// norm is alpha^2 + alpha beta + beta^2.
class SubringElement {
 public:
  SubringElement() : alpha_(0), beta_(0) {}
  SubringElement(Integer alpha, Integer beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  const Integer& alpha() const { return alpha_; }
  const Integer& beta() const { return beta_; }
  bool is_zero() const { return alpha_ == 0 && beta_ == 0; }

  Integer norm() const { return alpha_ * alpha_ + alpha_ * beta_ + beta_ * beta_; }
  SubringElement conj() const { return {alpha_ + beta_, -beta_}; }
  LatticePoint to_hurwitz() const;

  friend bool operator==(const SubringElement& x, const SubringElement& y) {
    return x.alpha_ == y.alpha_ && x.beta_ == y.beta_;
  }
  friend SubringElement operator+(const SubringElement& x, const SubringElement& y) {
    return {x.alpha_ + y.alpha_, x.beta_ + y.beta_};
  }
  friend SubringElement operator-(const SubringElement& x, const SubringElement& y) {
    return {x.alpha_ - y.alpha_, x.beta_ - y.beta_};
  }
  friend SubringElement operator-(const SubringElement& x) {
    return {-x.alpha_, -x.beta_};
  }
  // (a + bv)(a' + b'v) = aa' - bb' + (ab' + ba' + bb')v, from v^2 = v - 1
  friend SubringElement operator*(const SubringElement& x, const SubringElement& y) {
    return {x.alpha_ * y.alpha_ - x.beta_ * y.beta_,
            x.alpha_ * y.beta_ + x.beta_ * y.alpha_ + x.beta_ * y.beta_};
  }

 private:
  Integer alpha_;
  Integer beta_;
};

Integer subring_norm(const Integer& alpha, const Integer& beta);

// Literal format "a+b*v"; bare "v" means coefficient 1.
std::string to_string(const SubringElement& q);
SubringElement parse_subring(std::string_view text);

/// Complete residue system of Z[v] mod phi, for primitive phi
/// (gcd(alpha, beta) = 1) of norm > 1. The class representatives are the
/// Euclidean reductions of the integers 0 .. n(phi)-1, and m -> reduce(m) is
/// a ring isomorphism Z_{n(phi)} -> Z[v]_phi.
class ResidueSystem {
 public:
  explicit ResidueSystem(SubringElement phi);

  const SubringElement& modulus() const { return phi_; }
  const Integer& size() const { return n_; }
  const std::vector<SubringElement>& representatives() const { return reps_; }

  /// Representative of the class of the integer m.
  const SubringElement& int_map(const Integer& m) const;

  /// The unique residue in [0, n(phi)) congruent to q mod phi.
  Integer to_residue(const SubringElement& q) const;

 private:
  SubringElement phi_;
  Integer n_;
  Integer v_image_;  // integer w with v == w (mod phi)
  std::vector<SubringElement> reps_;
};

/// One-shot form of ResidueSystem::to_residue.
Integer to_residue(const SubringElement& q, const SubringElement& phi);

/// Euclidean reduction in Z[v]: returns (gamma, theta) with q = gamma phi +
/// theta and n(theta) < n(phi). Quotient coordinates are the truncated
/// coordinates of q conj(phi) / n(phi); when truncation misses the norm
/// bound, the best floor/ceil corner is used instead.
std::pair<SubringElement, SubringElement> subring_divide(const SubringElement& q,
                                                         const SubringElement& phi);

}  // namespace quatnum
