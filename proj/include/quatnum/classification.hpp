#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quatnum/gaussian.hpp"
#include "quatnum/quaternion.hpp"
#include "quatnum/scalars.hpp"

namespace quatnum {

/// A place of Q: a finite prime or the infinite (real) place.
struct Place {
  bool infinite;
  Integer prime;  // meaningful only when !infinite

  static Place at_infinity() { return {true, Integer(0)}; }
  static Place finite(Integer p) { return {false, std::move(p)}; }
};

/// Hilbert symbol (b, c)_p in {-1, +1}; -1 exactly when b x^2 + c y^2 = z^2
/// has no nontrivial p-adic solution, i.e. when p ramifies in H_Q(b, c).
/// Evaluated by the standard local formulas: at an odd prime through Legendre
/// symbols of the unit parts, at 2 through the residues of the unit parts
/// mod 8, at infinity -1 iff both arguments are negative.
int hilbert_symbol(const Integer& b, const Integer& c, const Place& p);

enum class Verdict { Split, Division };

struct ClassificationResult {
  Verdict verdict;
  std::vector<Integer> ramified_primes;  // ascending
  Integer reduced_discriminant;          // product of the ramified primes
};

/// Classifies H_Q(-b,-c) for positive b, c. Candidate primes are the
/// divisors of 2bc; the reduced discriminant is squarefree by construction.
ClassificationResult reduced_discriminant(const Integer& b, const Integer& c);

/// Two rational quaternion algebras are isomorphic iff their reduced
/// discriminants agree. Only the base field Q is supported.
bool are_isomorphic(const AlgebraParams& a1, const AlgebraParams& a2);

/// First `count` distinct integer solutions of x^2 + m y^2 = z^2 from the
/// parametrization x = a^2 - m b^2, y = 2ab, z = a^2 + m b^2, enumerating
/// (a, b) with a >= 1, b >= 0 by increasing a + b.
std::vector<std::array<Integer, 3>> conic_solutions(const Integer& m, long count);

/// True iff the point is nonzero and satisfies b x^2 + c y^2 = z^2 over Q(i).
bool verify_conic_point(const Integer& b, const Integer& c,
                        const std::array<GaussianRational, 3>& point);

/// Bounded search for a Gaussian-integer point on -b x^2 - c y^2 = z^2,
/// witnessing that H_{Q(i)}(-b,-c) splits. Triples are enumerated by
/// increasing max coordinate height, lexicographically within a height, so
/// the returned witness is deterministic. An empty result means no witness
/// exists up to the bound; it is not a proof that the algebra is division.
std::optional<std::array<GaussianRational, 3>> classify_over_gaussian(
    const Integer& b, const Integer& c, long search_bound);

}  // namespace quatnum
