#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "quatnum/quaternion.hpp"
#include "quatnum/scalars.hpp"

namespace quatnum {

/// f_0 = 0, f_1 = 1, f_n = f_{n-1} + f_{n-2}. Memoized; the cache is guarded
/// by a mutex, so concurrent callers are fine.
Integer fib(long n);

/// l_0 = 2, l_1 = 1, same recurrence.
Integer lucas(long n);

/// Exact Fibonacci identities, checkable at arbitrary indices.
enum class FibIdentity {
  SumOfSquares,      // f_n^2 + f_{n+1}^2 = f_{2n+1}              args: n
  SquareRecurrence,  // f_{n+3}^2 = 2f_{n+2}^2 + 2f_{n+1}^2 - f_n^2, n >= 1
  Addition,          // f_{n-1} f_m + f_n f_{m+1} = f_{n+m},      n, m >= 1
  Vajda,             // f_n f_m - f_{n-k} f_{m+k} = (-1)^{n-k} f_k f_{m+k-n},
                     //                             0 <= k <= n <= m + k
  ProductSum,        // f_n f_l + f_{n+3} f_{l+3} = 2 f_{n+l+3}   args: n, l
};

FibIdentity identity_from_string(std::string_view name);
std::string_view identity_name(FibIdentity id);

/// Evaluates both sides exactly; rejects out-of-domain arguments. Argument
/// order matches the comments above.
bool check_identity(FibIdentity id, const std::vector<long>& args);

/// Least pi > 0 with f_pi == 0 and f_{pi+1} == 1 (mod m); m >= 2.
Integer pisano_period(const Integer& m);

/// Permutation of four consecutive indices {n, .., n+3}: position i is sent
/// to n + offsets[i], so offsets is a bijection on {0,1,2,3}.
class SigmaPermutation {
 public:
  explicit SigmaPermutation(const std::array<int, 4>& offsets);
  const std::array<int, 4>& offsets() const { return offsets_; }

  /// The four permutations whose Fibonacci quaternions have norm f_{2n+3}.
  static const std::vector<SigmaPermutation>& norm_law_permutations();

  friend bool operator==(const SigmaPermutation& a, const SigmaPermutation& b) {
    return a.offsets_ == b.offsets_;
  }

 private:
  std::array<int, 4> offsets_;
};

/// (1/2)(f_{sigma(n)} + f_{sigma(n+1)} e2 + f_{sigma(n+2)} e3 +
/// f_{sigma(n+3)} e4) in H_Q(-1,-2).
struct FibQuaternion {
  long n;
  SigmaPermutation sigma;
  RationalQuaternion value;
};

FibQuaternion fib_hurwitz(long n, const SigmaPermutation& sigma);

/// Product of the sign-twisted Fibonacci quaternions
///   F'  = (1/2)(f_{n+3} - f_n e2 - f_{n+1} e3 + f_{n+2} e4)
///   F'' = (1/2)(f_{l+3} + f_l e2 + f_{l+1} e3 - f_{l+2} e4)
/// for 1 <= n < l. The trace is 2 f_{n+l+3}; the trace-free part
/// (product - trace/2) depends only on l - n and the parity of n.
struct SpecialProduct {
  RationalQuaternion product;
  RationalQuaternion closed_form;  // product minus half its trace
  Integer trace;
};

SpecialProduct special_product(long n, long l);

}  // namespace quatnum
