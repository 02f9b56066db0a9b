#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quatnum/quaternion.hpp"
#include "test_support.hpp"

using namespace quatnum;
using test_support::random_gaussian_quaternion;
using test_support::random_rational_quaternion;

namespace {

const AlgebraParams kH11{1, 1};
const AlgebraParams kH12{1, 2};

RationalQuaternion basis(const AlgebraParams& p, int slot) {
  std::array<Rational, 4> co{};
  co[slot] = 1;
  return {p, co};
}

}  // namespace

TEST_CASE("algebra parameters must be positive") {
  CHECK_THROWS_AS(AlgebraParams(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraParams(1, -2), std::invalid_argument);
}

TEST_CASE("basis multiplication follows the table") {
  auto e2 = basis(kH12, 1), e3 = basis(kH12, 2), e4 = basis(kH12, 3);
  CHECK(e2 * e3 == e4);
  CHECK(e3 * e2 == -e4);
  CHECK(e2 * e2 == -RationalQuaternion::one(kH12));
  CHECK(e3 * e3 == RationalQuaternion(kH12, -2, 0, 0, 0));
  CHECK(e4 * e4 == RationalQuaternion(kH12, -2, 0, 0, 0));
  CHECK(e3 * e4 == e2.scale(Rational(2)));
  CHECK(e4 * e3 == e2.scale(Rational(-2)));
  CHECK(e4 * e2 == e3);
  CHECK(e2 * e4 == -e3);
}

TEST_CASE("one is the identity") {
  std::mt19937_64 rng(21);
  auto one = RationalQuaternion::one(kH12);
  for (int i = 0; i < 50; ++i) {
    auto x = random_rational_quaternion(rng, kH12, 10);
    CHECK(one * x == x);
    CHECK(x * one == x);
  }
}

TEST_CASE("conjugation") {
  RationalQuaternion x(kH12, 1, 1, 0, 0);  // 1 + e2
  CHECK(x.conj() == RationalQuaternion(kH12, 1, -1, 0, 0));
  RationalQuaternion s(kH12, 5, 0, 0, 0);
  CHECK(s.conj() == s);
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    auto q = random_rational_quaternion(rng, kH12, 10);
    CHECK(q.conj().conj() == q);
  }
}

TEST_CASE("trace") {
  CHECK(RationalQuaternion(kH12, 3, 1, 0, 0).trace() == 6);
  CHECK(RationalQuaternion(kH12, 0, 1, 1, 1).trace() == 0);
  Rational h = make_rational(1, 2);
  CHECK(RationalQuaternion(kH11, h, h, h, h).trace() == 1);
}

TEST_CASE("norm") {
  Rational h = make_rational(1, 2);
  CHECK(RationalQuaternion(kH11, h, h, h, h).norm() == 1);
  CHECK(RationalQuaternion(kH12).norm() == 0);
  CHECK(RationalQuaternion(kH12, 1, 1, 1, 1).norm() == 6);
}

TEST_CASE("inverse") {
  auto one = RationalQuaternion::one(kH11);
  CHECK(one.inverse() == one);
  auto e2 = basis(kH11, 1);
  CHECK(e2.inverse() == -e2);
  RationalQuaternion x(kH12, 1, 0, 1, 0);  // 1 + e3, norm 3
  CHECK(x.inverse() == RationalQuaternion(kH12, make_rational(1, 3), 0,
                                          make_rational(-1, 3), 0));
  CHECK_THROWS_AS(RationalQuaternion(kH12).inverse(), std::domain_error);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    auto q = random_rational_quaternion(rng, kH12, 10);
    if (q.is_zero()) continue;
    CHECK(q * q.inverse() == RationalQuaternion::one(kH12));
  }
}

TEST_CASE("mismatched parameters are rejected") {
  RationalQuaternion x(kH11, 1, 0, 0, 0), y(kH12, 1, 0, 0, 0);
  CHECK_THROWS_AS(x * y, std::invalid_argument);
  CHECK_THROWS_AS(x + y, std::invalid_argument);
}

TEST_CASE("norm is multiplicative over Q") {
  std::mt19937_64 rng(24);
  for (const AlgebraParams& p : {kH11, kH12, AlgebraParams(2, 5)}) {
    for (int i = 0; i < 100; ++i) {
      auto x = random_rational_quaternion(rng, p, 8);
      auto y = random_rational_quaternion(rng, p, 8);
      CHECK((x * y).norm() == x.norm() * y.norm());
    }
  }
}

TEST_CASE("norm is multiplicative over Q(i)") {
  std::mt19937_64 rng(25);
  AlgebraParams p(1, 2, BaseField::Qi);
  for (int i = 0; i < 100; ++i) {
    auto x = random_gaussian_quaternion(rng, p, 5);
    auto y = random_gaussian_quaternion(rng, p, 5);
    CHECK((x * y).norm() == x.norm() * y.norm());
  }
}

TEST_CASE("conjugation is an anti-automorphism") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 100; ++i) {
    auto x = random_rational_quaternion(rng, kH12, 8);
    auto y = random_rational_quaternion(rng, kH12, 8);
    CHECK((x * y).conj() == y.conj() * x.conj());
  }
}

TEST_CASE("characteristic identity x^2 - t(x) x + n(x) = 0") {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 100; ++i) {
    auto x = random_rational_quaternion(rng, kH12, 8);
    auto lhs = x * x - x.scale(x.trace()) +
               RationalQuaternion::one(kH12).scale(x.norm());
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 60; ++i) {
    auto x = random_rational_quaternion(rng, kH12, 6);
    auto y = random_rational_quaternion(rng, kH12, 6);
    auto z = random_rational_quaternion(rng, kH12, 6);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("trace equals x plus its conjugate") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    auto x = random_rational_quaternion(rng, kH12, 8);
    auto s = x + x.conj();
    CHECK(s == RationalQuaternion(kH12, x.trace(), 0, 0, 0));
  }
}

TEST_CASE("quaternion literal round trip") {
  const char* cases[] = {"0", "1", "-1/2", "3/2 + 1/2*e2 + 1/2*e3 + e4",
                         "1 - e2", "2*e3 - 5/3*e4"};
  for (const char* s : cases) CHECK(to_string(parse_quaternion(s, kH12)) == s);
  CHECK(parse_quaternion("5", kH11) == RationalQuaternion(kH11, 5, 0, 0, 0));
  CHECK(parse_quaternion("e2+e3", kH11) == RationalQuaternion(kH11, 0, 1, 1, 0));
  CHECK_THROWS_AS(parse_quaternion("", kH11), parse_error);
  CHECK_THROWS_AS(parse_quaternion("1 + q", kH11), parse_error);
}

TEST_CASE("base field tag must match the scalar type") {
  AlgebraParams qi(1, 1, BaseField::Qi);
  auto make_rat = [](const AlgebraParams& p) { return RationalQuaternion(p); };
  auto make_gauss = [](const AlgebraParams& p) { return GaussianQuaternion(p); };
  CHECK_THROWS_AS(make_rat(qi), std::invalid_argument);
  CHECK_THROWS_AS(make_gauss(kH11), std::invalid_argument);
}
