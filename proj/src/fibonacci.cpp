#include "quatnum/fibonacci.hpp"

#include <algorithm>
#include <mutex>

namespace quatnum {

namespace {

Integer sequence_value(long n, std::vector<Integer>& table, std::mutex& mu) {
  if (n < 0) throw std::invalid_argument("negative sequence index");
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(table.size()) <= n) {
    std::size_t k = table.size();
    table.push_back(table[k - 1] + table[k - 2]);
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace

Integer fib(long n) {
  static std::vector<Integer> table = {Integer(0), Integer(1)};
  static std::mutex mu;
  return sequence_value(n, table, mu);
}

Integer lucas(long n) {
  static std::vector<Integer> table = {Integer(2), Integer(1)};
  static std::mutex mu;
  return sequence_value(n, table, mu);
}

FibIdentity identity_from_string(std::string_view name) {
  if (name == "sum-of-squares") return FibIdentity::SumOfSquares;
  if (name == "square-recurrence") return FibIdentity::SquareRecurrence;
  if (name == "addition") return FibIdentity::Addition;
  if (name == "vajda") return FibIdentity::Vajda;
  if (name == "product-sum") return FibIdentity::ProductSum;
  throw parse_error("unknown identity '" + std::string(name) + "'");
}

std::string_view identity_name(FibIdentity id) {
  switch (id) {
    case FibIdentity::SumOfSquares: return "sum-of-squares";
    case FibIdentity::SquareRecurrence: return "square-recurrence";
    case FibIdentity::Addition: return "addition";
    case FibIdentity::Vajda: return "vajda";
    case FibIdentity::ProductSum: return "product-sum";
  }
  throw std::logic_error("unreachable");
}

bool check_identity(FibIdentity id, const std::vector<long>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("wrong number of arguments for the identity");
  };
  switch (id) {
    case FibIdentity::SumOfSquares: {
      need(1);
      long n = args[0];
      if (n < 0) throw std::invalid_argument("index must be nonnegative");
      Integer lhs = fib(n) * fib(n) + fib(n + 1) * fib(n + 1);
      return lhs == fib(2 * n + 1);
    }
    case FibIdentity::SquareRecurrence: {
      need(1);
      long n = args[0];
      if (n < 1) throw std::invalid_argument("index must be positive");
      Integer lhs = fib(n + 3) * fib(n + 3);
      Integer rhs = 2 * fib(n + 2) * fib(n + 2) + 2 * fib(n + 1) * fib(n + 1) -
                    fib(n) * fib(n);
      return lhs == rhs;
    }
    case FibIdentity::Addition: {
      need(2);
      long n = args[0], m = args[1];
      if (n < 1 || m < 1) throw std::invalid_argument("indices must be positive");
      Integer lhs = fib(n - 1) * fib(m) + fib(n) * fib(m + 1);
      return lhs == fib(n + m);
    }
    case FibIdentity::Vajda: {
      need(3);
      long n = args[0], m = args[1], k = args[2];
      if (k < 0 || k > n || m + k < n)
        throw std::invalid_argument("identity needs 0 <= k <= n <= m + k");
      Integer lhs = fib(n) * fib(m) - fib(n - k) * fib(m + k);
      Integer rhs = fib(k) * fib(m + k - n);
      if ((n - k) % 2 != 0) rhs = -rhs;
      return lhs == rhs;
    }
    case FibIdentity::ProductSum: {
      need(2);
      long n = args[0], l = args[1];
      if (n < 0 || l < 0) throw std::invalid_argument("indices must be nonnegative");
      Integer lhs = fib(n) * fib(l) + fib(n + 3) * fib(l + 3);
      return lhs == 2 * fib(n + l + 3);
    }
  }
  throw std::logic_error("unreachable");
}

Integer pisano_period(const Integer& m) {
  if (m < 2) throw std::invalid_argument("pisano_period needs m >= 2");
  Integer a = 0, b = 1;
  Integer period = 0;
  do {
    Integer next = (a + b) % m;
    a = b;
    b = next;
    ++period;
  } while (!(a == 0 && b == 1));
  return period;
}

SigmaPermutation::SigmaPermutation(const std::array<int, 4>& offsets)
    : offsets_(offsets) {
  std::array<int, 4> sorted = offsets;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3})
    throw std::invalid_argument("offsets must be a permutation of {0,1,2,3}");
}

const std::vector<SigmaPermutation>& SigmaPermutation::norm_law_permutations() {
  static const std::vector<SigmaPermutation> perms = {
      SigmaPermutation({3, 0, 1, 2}), SigmaPermutation({0, 3, 1, 2}),
      SigmaPermutation({3, 0, 2, 1}), SigmaPermutation({0, 3, 2, 1})};
  return perms;
}

FibQuaternion fib_hurwitz(long n, const SigmaPermutation& sigma) {
  if (n < 1) throw std::invalid_argument("fib_hurwitz needs n >= 1");
  AlgebraParams params(1, 2, BaseField::Q);
  std::array<Rational, 4> co;
  for (int i = 0; i < 4; ++i)
    co[i] = make_rational(fib(n + sigma.offsets()[i]), 2);
  return {n, sigma, RationalQuaternion(params, co)};
}

SpecialProduct special_product(long n, long l) {
  if (n < 1 || l <= n) throw std::invalid_argument("special_product needs 1 <= n < l");
  AlgebraParams params(1, 2, BaseField::Q);
  auto half = [](const Integer& z) { return make_rational(z, 2); };
  RationalQuaternion fp(params, half(fib(n + 3)), half(-fib(n)), half(-fib(n + 1)),
                        half(fib(n + 2)));
  RationalQuaternion fpp(params, half(fib(l + 3)), half(fib(l)), half(fib(l + 1)),
                         half(-fib(l + 2)));
  RationalQuaternion product = fp * fpp;
  Rational tr = product.trace();
  if (denominator(tr) != 1) throw std::logic_error("trace not integral");
  RationalQuaternion scalar_part(params, tr / 2, Rational(0), Rational(0), Rational(0));
  return {product, product - scalar_part, numerator(tr)};
}

}  // namespace quatnum
