#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quatnum/scalars.hpp"

namespace quatnum {

/// The two readings of the product on the ordered monoid
/// A = {y_0 <= ... <= y_{2^k - 1}}: index addition truncated at the top
/// element, or bitwise OR of the indices (the componentwise product of the
/// k two-element factors). Both are commutative and associative with y_0 as
/// identity; they differ already at y_1 * y_1.
enum class MonoidVariant { TruncatedAdd, ComponentwiseOr };

MonoidVariant monoid_variant_from_string(std::string_view name);

class MonoidElement {
 public:
  MonoidElement(int k, std::uint64_t index);

  int k() const { return k_; }
  std::uint64_t index() const { return index_; }
  std::uint64_t top() const { return (std::uint64_t(1) << k_) - 1; }
  bool is_identity() const { return index_ == 0; }
  bool is_top() const { return index_ == top(); }

  friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
    return a.k_ == b.k_ && a.index_ == b.index_;
  }

 private:
  int k_;
  std::uint64_t index_;
};

MonoidElement monoid_op(const MonoidElement& a, const MonoidElement& b,
                        MonoidVariant variant);

/// Recorded run of v_0 = a, v_1 = b, v_{n+2} = v_n * v_{n+1}: the sequence is
/// constant equal to `limit` from index `t` on, and t is minimal.
struct FibTrace {
  std::vector<MonoidElement> terms;  // up to and including the first stable pair
  std::size_t t;
  MonoidElement limit;
};

/// Iterates until two consecutive equal terms whose value is idempotent, which
/// pins the whole tail. max_steps = 0 means the default bound 2^k + 4; running
/// past the bound means a broken operation and raises logic_error.
FibTrace fib_sequence(const MonoidElement& a, const MonoidElement& b,
                      MonoidVariant variant, std::size_t max_steps = 0);

}  // namespace quatnum
