#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quatnum/monoid.hpp"

using namespace quatnum;

namespace {

MonoidElement y(int k, std::uint64_t i) { return MonoidElement(k, i); }

}  // namespace

TEST_CASE("element construction") {
  CHECK_THROWS_AS(MonoidElement(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(MonoidElement(3, 8), std::invalid_argument);
  CHECK(y(3, 7).is_top());
  CHECK(y(3, 0).is_identity());
}

TEST_CASE("operation examples at k = 3") {
  for (auto v : {MonoidVariant::TruncatedAdd, MonoidVariant::ComponentwiseOr}) {
    CHECK(monoid_op(y(3, 1), y(3, 2), v) == y(3, 3));
    CHECK(monoid_op(y(3, 3), y(3, 6), v) == y(3, 7));
    CHECK(monoid_op(y(3, 2), y(3, 5), v) == y(3, 7));
  }
  // the two readings diverge on repeated elements
  CHECK(monoid_op(y(3, 1), y(3, 1), MonoidVariant::TruncatedAdd) == y(3, 2));
  CHECK(monoid_op(y(3, 1), y(3, 1), MonoidVariant::ComponentwiseOr) == y(3, 1));
  CHECK_THROWS_AS(monoid_op(y(3, 1), y(4, 1), MonoidVariant::TruncatedAdd),
                  std::invalid_argument);
}

TEST_CASE("monoid laws, exhaustive for small k") {
  for (auto variant : {MonoidVariant::TruncatedAdd, MonoidVariant::ComponentwiseOr})
    for (int k = 1; k <= 4; ++k) {
      const std::uint64_t size = std::uint64_t(1) << k;
      for (std::uint64_t i = 0; i < size; ++i) {
        CHECK(monoid_op(y(k, i), y(k, 0), variant) == y(k, i));
        CHECK(monoid_op(y(k, 0), y(k, i), variant) == y(k, i));
        for (std::uint64_t j = 0; j < size; ++j) {
          MonoidElement ab = monoid_op(y(k, i), y(k, j), variant);
          CHECK(ab == monoid_op(y(k, j), y(k, i), variant));
          // monotone: a * b >= max(a, b) in the total order
          CHECK(ab.index() >= std::max(i, j));
          for (std::uint64_t l = 0; l < size; ++l) {
            MonoidElement left = monoid_op(ab, y(k, l), variant);
            MonoidElement right = monoid_op(y(k, i), monoid_op(y(k, j), y(k, l), variant), variant);
            CHECK(left == right);
          }
        }
      }
    }
}

TEST_CASE("worked trace at k = 3") {
  FibTrace tr = fib_sequence(y(3, 2), y(3, 4), MonoidVariant::TruncatedAdd);
  REQUIRE(tr.terms.size() == 5);
  CHECK(tr.terms[0] == y(3, 2));
  CHECK(tr.terms[1] == y(3, 4));
  CHECK(tr.terms[2] == y(3, 6));
  CHECK(tr.terms[3] == y(3, 7));
  CHECK(tr.terms[4] == y(3, 7));
  CHECK(tr.t == 3);
  CHECK(tr.limit == y(3, 7));
  CHECK(tr.limit.is_top());
}

TEST_CASE("identity seeds are already stationary") {
  FibTrace tr = fib_sequence(y(3, 0), y(3, 0), MonoidVariant::TruncatedAdd);
  CHECK(tr.t == 0);
  CHECK(tr.limit == y(3, 0));
}

TEST_CASE("repeated small seed climbs to the top") {
  FibTrace tr = fib_sequence(y(3, 1), y(3, 1), MonoidVariant::TruncatedAdd);
  REQUIRE(tr.terms.size() == 7);
  CHECK(tr.terms[2] == y(3, 2));
  CHECK(tr.terms[3] == y(3, 3));
  CHECK(tr.terms[4] == y(3, 5));
  CHECK(tr.terms[5] == y(3, 7));
  CHECK(tr.t == 5);
  CHECK(tr.limit.is_top());
}

TEST_CASE("truncated addition sends nonzero seeds to the top, exhaustively") {
  for (int k = 1; k <= 4; ++k) {
    const std::uint64_t size = std::uint64_t(1) << k;
    for (std::uint64_t a = 1; a < size; ++a)
      for (std::uint64_t b = 1; b < size; ++b) {
        FibTrace tr = fib_sequence(y(k, a), y(k, b), MonoidVariant::TruncatedAdd);
        CHECK(tr.limit.is_top());
        // stationarity index is tight
        CHECK(tr.terms[tr.t] == tr.limit);
        if (tr.t > 0) CHECK_FALSE(tr.terms[tr.t - 1] == tr.limit);
      }
  }
}

TEST_CASE("bitwise-or limit is the join of the seeds, exhaustively") {
  for (int k = 1; k <= 4; ++k) {
    const std::uint64_t size = std::uint64_t(1) << k;
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b) {
        FibTrace tr = fib_sequence(y(k, a), y(k, b), MonoidVariant::ComponentwiseOr);
        CHECK(tr.limit == y(k, a | b));
        CHECK(tr.t <= 2);
      }
  }
}

TEST_CASE("every seed pair stabilizes within the step bound") {
  for (auto variant : {MonoidVariant::TruncatedAdd, MonoidVariant::ComponentwiseOr})
    for (int k = 1; k <= 6; ++k) {
      const std::uint64_t size = std::uint64_t(1) << k;
      for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t b = 0; b < size; ++b) {
          FibTrace tr = fib_sequence(y(k, a), y(k, b), variant, size + 4);
          // recorded terms obey the recurrence
          for (std::size_t i = 0; i + 2 < tr.terms.size(); ++i)
            CHECK(monoid_op(tr.terms[i], tr.terms[i + 1], variant) == tr.terms[i + 2]);
        }
    }
}
