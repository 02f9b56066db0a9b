#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "quatnum/integer_quaternions.hpp"
#include "quatnum/quadratic_forms.hpp"

using namespace quatnum;

namespace {

const AlgebraParams kH11{1, 1};

LatticePoint lp(const AlgebraParams& p, long a, long b, long c, long d) {
  return LatticePoint::lipschitz(p, {Integer(a), Integer(b), Integer(c), Integer(d)});
}

LatticePoint random_lipschitz(std::mt19937_64& rng, const AlgebraParams& p, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return LatticePoint::lipschitz(p, {Integer(d(rng)), Integer(d(rng)), Integer(d(rng)),
                                     Integer(d(rng))});
}

}  // namespace

TEST_CASE("lattice point construction rules") {
  CHECK_THROWS_AS(lp(AlgebraParams(3, 7), 1, 0, 0, 0), std::invalid_argument);
  Rational h = make_rational(1, 2);
  LatticePoint v = LatticePoint::hurwitz({h, h, h, h});
  CHECK(v.kind() == LatticeKind::Hurwitz);
  CHECK(v.norm() == 1);
  CHECK_THROWS_AS(LatticePoint::hurwitz({h, Rational(1), Rational(0), Rational(0)}),
                  std::invalid_argument);
  LatticePoint w = LatticePoint::hurwitz({Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(w.kind() == LatticeKind::Lipschitz);
}

TEST_CASE("hurwitz parity survives addition and multiplication") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> d(-9, 9);
  auto random_hurwitz = [&](bool half) {
    std::array<Rational, 4> co;
    for (auto& c : co) {
      long num = d(rng);
      c = half ? make_rational(2 * num + 1, 2) : Rational(num);
    }
    return LatticePoint::hurwitz(co);
  };
  for (int i = 0; i < 200; ++i) {
    LatticePoint x = random_hurwitz(i % 2 == 0);
    LatticePoint y = random_hurwitz((i / 2) % 2 == 0);
    // construction validates the parity discipline; these must not throw
    LatticePoint s = x + y;
    LatticePoint p = x * y;
    CHECK(s.norm() >= 0);
    CHECK(p.norm() == x.norm() * y.norm());
  }
}

TEST_CASE("scaled division: rounding path example") {
  // x = e3, y = 1 + e2 in H(-1,-1); ties round toward zero, so theta = x
  LatticePoint x = lp(kH11, 0, 0, 1, 0);
  LatticePoint y = lp(kH11, 1, 1, 0, 0);
  auto [gamma, theta] = divide_with_scaled_remainder(x, y);
  CHECK(theta == x);
  CHECK(gamma == lp(kH11, 0, 0, 0, 0));
  CHECK(theta.norm() == 1);
}

TEST_CASE("scaled division: exact quotient") {
  LatticePoint y = lp(kH11, 1, 2, 0, 2);
  auto [gamma, theta] = divide_with_scaled_remainder(y, y);
  CHECK(theta.is_zero());
  CHECK(gamma == lp(kH11, 9, 0, 0, 0));  // n(y) = 9
  CHECK_THROWS_AS(divide_with_scaled_remainder(y, lp(kH11, 0, 0, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("scaled division identity holds in all seven algebras") {
  std::mt19937_64 rng(52);
  for (const auto& [b, c] : universal_norm_pairs()) {
    AlgebraParams params(b, c);
    for (int i = 0; i < 200; ++i) {
      LatticePoint x = random_lipschitz(rng, params, 12);
      LatticePoint y = random_lipschitz(rng, params, 12);
      if (y.is_zero()) continue;
      auto [gamma, theta] = divide_with_scaled_remainder(x, y);
      Integer n = y.norm();
      // n(y) x = gamma y + n(y) theta
      RationalQuaternion scaled_x = x.value().scale(Rational(n));
      RationalQuaternion rhs = gamma.value() * y.value() + theta.value().scale(Rational(n));
      CHECK(scaled_x == rhs);
      CHECK(theta.norm() < n);
    }
  }
}

TEST_CASE("right division examples") {
  LatticePoint x = lp(kH11, 5, 0, 0, 0);
  LatticePoint y = lp(kH11, 1, 1, 1, 0);  // norm 3
  auto [gamma, theta] = right_divide(x, y);
  CHECK(gamma == lp(kH11, 2, -2, -2, 0));
  CHECK(theta == lp(kH11, -1, 0, 0, 0));
  CHECK(theta.norm() == 1);

  auto [g0, t0] = right_divide(lp(kH11, 0, 0, 0, 0), y);
  CHECK(g0.is_zero());
  CHECK(t0.is_zero());

  auto [g1, t1] = right_divide(y, y);
  CHECK(g1 == lp(kH11, 1, 0, 0, 0));
  CHECK(t1.is_zero());
}

TEST_CASE("right division rejects even norms and zero divisors") {
  LatticePoint x = lp(kH11, 3, 1, 0, 0);
  CHECK_THROWS_AS(right_divide(x, lp(kH11, 1, 1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(right_divide(x, lp(kH11, 0, 0, 0, 0)), std::invalid_argument);
  AlgebraParams h12(1, 2);
  CHECK_THROWS_AS(right_divide(lp(h12, 1, 0, 0, 0), lp(h12, 1, 0, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("right division identity and remainder bound, random") {
  std::mt19937_64 rng(53);
  int done = 0;
  while (done < 1000) {
    LatticePoint x = random_lipschitz(rng, kH11, 25);
    LatticePoint y = random_lipschitz(rng, kH11, 25);
    if (y.is_zero() || y.norm() % 2 == 0) continue;
    auto [gamma, theta] = right_divide(x, y);
    CHECK(x.value() == gamma.value() * y.value() + theta.value());
    CHECK(theta.norm() < y.norm());
    ++done;
  }
}

TEST_CASE("right congruence") {
  LatticePoint phi = lp(kH11, 1, 1, 1, 0);
  LatticePoint x = lp(kH11, 4, -2, 7, 1);
  CHECK(is_right_congruent(x, x, phi));
  CHECK_FALSE(is_right_congruent(lp(kH11, 2, 0, 0, 0), lp(kH11, 0, 0, 0, 0), phi));
  CHECK(is_right_congruent(phi, lp(kH11, 0, 0, 0, 0), phi));
  // congruence respects adding theta * phi on the left argument
  std::mt19937_64 rng(54);
  for (int i = 0; i < 100; ++i) {
    LatticePoint theta = random_lipschitz(rng, kH11, 6);
    LatticePoint yy = random_lipschitz(rng, kH11, 6);
    CHECK(is_right_congruent(yy + theta * phi, yy, phi));
  }
  CHECK_THROWS_AS(is_right_congruent(x, x, lp(kH11, 1, 1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(is_right_congruent(x, x, lp(kH11, 0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("residue class counting") {
  CHECK(count_residues(lp(kH11, 1, 1, 1, 0), 3) == 9);    // n = 3
  CHECK(count_residues(lp(kH11, 1, 0, 0, 0), 1) == 1);
  CHECK(count_residues(lp(kH11, 2, 1, 0, 0), 5) == 25);   // n = 5
}

TEST_CASE("residue counting agrees with pairwise congruence") {
  for (const auto& phi : {lp(kH11, 1, 1, 1, 0), lp(kH11, 2, 1, 0, 0)}) {
    const long box = phi.norm().get_si();
    std::vector<LatticePoint> reps;
    for (long a0 = 0; a0 < box; ++a0)
      for (long a1 = 0; a1 < box; ++a1)
        for (long a2 = 0; a2 < box; ++a2)
          for (long a3 = 0; a3 < box; ++a3) {
            LatticePoint x = lp(kH11, a0, a1, a2, a3);
            bool fresh = true;
            for (const auto& r : reps)
              if (is_right_congruent(x, r, phi)) {
                fresh = false;
                break;
              }
            if (fresh) reps.push_back(x);
          }
    CHECK(count_residues(phi, box) == Integer(static_cast<long>(reps.size())));
  }
}

TEST_CASE("quotient size is the squared norm for every small odd modulus") {
  for (long a0 = -3; a0 <= 3; ++a0)
    for (long a1 = -3; a1 <= 3; ++a1)
      for (long a2 = -3; a2 <= 3; ++a2)
        for (long a3 = -3; a3 <= 3; ++a3) {
          Integer n = Integer(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3);
          if (n == 0 || n % 2 == 0 || n > 13) continue;
          LatticePoint phi = lp(kH11, a0, a1, a2, a3);
          CHECK(count_residues(phi, n) == n * n);
        }
}

TEST_CASE("units and prime quaternions") {
  CHECK(is_unit(lp(kH11, 1, 0, 0, 0)));
  CHECK_FALSE(is_prime_quaternion(lp(kH11, 1, 0, 0, 0)));
  LatticePoint q = lp(kH11, 1, 1, 1, 2);  // norm 7
  CHECK(is_prime_quaternion(q));
  CHECK_FALSE(is_unit(q));
  LatticePoint two = lp(kH11, 2, 0, 0, 0);  // norm 4
  CHECK_FALSE(is_unit(two));
  CHECK_FALSE(is_prime_quaternion(two));
}

TEST_CASE("subring norm values") {
  CHECK(subring_norm(-1, 2) == 3);
  CHECK(subring_norm(1, 2) == 7);
  CHECK(subring_norm(0, 0) == 0);
  // nonzero elements have positive norm
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      if (a != 0 || b != 0) CHECK(subring_norm(a, b) > 0);
}

TEST_CASE("v satisfies v^2 = v - 1 and generates a commutative ring") {
  Rational h = make_rational(1, 2);
  LatticePoint v = LatticePoint::hurwitz({h, h, h, h});
  LatticePoint v2 = v * v;
  LatticePoint expected = v - LatticePoint::hurwitz({Rational(1), Rational(0),
                                                     Rational(0), Rational(0)});
  CHECK(v2 == expected);

  std::mt19937_64 rng(55);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int i = 0; i < 200; ++i) {
    SubringElement x(d(rng), d(rng));
    SubringElement y(d(rng), d(rng));
    // multiplication in (1, v) coordinates matches quaternion multiplication
    CHECK((x * y).to_hurwitz() == x.to_hurwitz() * y.to_hurwitz());
    CHECK(x * y == y * x);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x.norm() == x.to_hurwitz().norm());
    CHECK(x.conj().to_hurwitz() == x.to_hurwitz().conj());
  }
}

TEST_CASE("subring literal round trip") {
  const char* cases[] = {"0", "1", "-1", "v", "-v", "2*v", "-1+2*v", "2-2*v"};
  for (const char* s : cases) CHECK(to_string(parse_subring(s)) == s);
  CHECK(parse_subring("1+v") == SubringElement(1, 1));
  CHECK_THROWS_AS(parse_subring("w"), parse_error);
}

TEST_CASE("euclidean division in the subring") {
  std::mt19937_64 rng(56);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 500; ++i) {
    SubringElement q(d(rng), d(rng));
    SubringElement phi(d(rng), d(rng));
    if (phi.is_zero()) continue;
    auto [gamma, theta] = subring_divide(q, phi);
    CHECK(q == gamma * phi + theta);
    CHECK(theta.norm() < phi.norm());
  }
  CHECK_THROWS_AS(subring_divide(SubringElement(1, 0), SubringElement(0, 0)),
                  std::invalid_argument);
}

TEST_CASE("residue system for -1 + 2v") {
  ResidueSystem sys(SubringElement(-1, 2));
  CHECK(sys.size() == 3);
  REQUIRE(sys.representatives().size() == 3);
  CHECK(sys.representatives()[0] == SubringElement(0, 0));
  CHECK(sys.representatives()[1] == SubringElement(1, 0));
  CHECK(sys.representatives()[2] == SubringElement(0, 1));  // v
  CHECK(sys.to_residue(SubringElement(0, 1)) == 2);
  CHECK(sys.to_residue(SubringElement(0, 0)) == 0);
  CHECK(sys.to_residue(SubringElement(-1, 2)) == 0);
  CHECK(sys.int_map(2) == SubringElement(0, 1));
  CHECK(sys.int_map(5) == SubringElement(0, 1));  // 5 == 2 (mod 3)
}

TEST_CASE("residue system for 1 + 2v") {
  ResidueSystem sys(SubringElement(1, 2));
  CHECK(sys.size() == 7);
  CHECK(sys.representatives().size() == 7);
  // pairwise distinct classes
  std::set<Integer> distinct;
  for (const auto& r : sys.representatives()) distinct.insert(sys.to_residue(r));
  CHECK(distinct.size() == 7);
  // the class of 2 contains v - 1
  CHECK(sys.to_residue(SubringElement(-1, 1)) == 2);
  CHECK(sys.to_residue(SubringElement(0, 1)) == 3);   // v
  CHECK(sys.to_residue(SubringElement(1, 1)) == 4);   // 1 + v
  CHECK(sys.to_residue(SubringElement(-1, 2)) == 5);  // 2v - 1
  CHECK(sys.to_residue(SubringElement(0, 2)) == 6);   // 2v
}

TEST_CASE("residue system for 1 + v") {
  ResidueSystem sys(SubringElement(1, 1));
  CHECK(sys.size() == 3);
  CHECK(sys.representatives().size() == 3);
}

TEST_CASE("residue system rejects bad moduli") {
  CHECK_THROWS_AS(ResidueSystem(SubringElement(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ResidueSystem(SubringElement(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(ResidueSystem(SubringElement(0, 1)), std::invalid_argument);
}

TEST_CASE("worked relations behind the residue listings") {
  SubringElement m1(-1, 2), m2(1, 2);
  auto id = [](long a, long b, const SubringElement& phi, const SubringElement& g,
               const SubringElement& r, long rnorm) {
    CHECK(SubringElement(a, b) == phi * g + r);
    CHECK(r.norm() == rnorm);
  };
  id(2, 0, m1, SubringElement(0, -1), SubringElement(0, 1), 1);    // 2 = phi(-v) + v
  id(2, 0, m2, SubringElement(1, -1), SubringElement(-1, 1), 1);   // v - 1
  id(3, 0, m2, SubringElement(1, -1), SubringElement(0, 1), 1);    // v
  id(4, 0, m2, SubringElement(1, -1), SubringElement(1, 1), 3);    // 1 + v
  id(5, 0, m2, SubringElement(2, -2), SubringElement(-1, 2), 3);   // 2v - 1
  id(6, 0, m2, SubringElement(2, -2), SubringElement(0, 2), 4);    // 2v
}

TEST_CASE("to_residue is a ring homomorphism") {
  std::mt19937_64 rng(57);
  std::uniform_int_distribution<long> d(-25, 25);
  const SubringElement moduli[] = {SubringElement(-1, 2), SubringElement(1, 2),
                                   SubringElement(3, 2), SubringElement(1, 4)};
  for (const auto& phi : moduli) {
    ResidueSystem sys(phi);
    const Integer n = sys.size();
    for (int i = 0; i < 100; ++i) {
      SubringElement x(d(rng), d(rng));
      SubringElement y(d(rng), d(rng));
      CHECK(sys.to_residue(x + y) == (sys.to_residue(x) + sys.to_residue(y)) % n);
      CHECK(sys.to_residue(x * y) == (sys.to_residue(x) * sys.to_residue(y)) % n);
    }
  }
}

TEST_CASE("residue tables are isomorphic to integer residues mod the norm") {
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b) {
      Integer g;
      Integer aa(a), bb(b);
      mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
      if (g != 1) continue;
      Integer n = subring_norm(a, b);
      if (n <= 1 || n > 50) continue;
      ResidueSystem sys(SubringElement(a, b));
      long ln = n.get_si();
      for (long i = 0; i < ln; ++i) {
        CHECK(sys.to_residue(sys.int_map(i)) == i);
        for (long j = 0; j < ln; ++j) {
          const SubringElement& ri = sys.int_map(i);
          const SubringElement& rj = sys.int_map(j);
          CHECK(sys.to_residue(ri + rj) == (i + j) % ln);
          CHECK(sys.to_residue(ri * rj) == (i * j) % ln);
        }
      }
    }
}
