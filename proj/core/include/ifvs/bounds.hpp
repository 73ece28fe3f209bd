#pragma once

#include <cstdint>
#include <limits>
#include <numbers>

namespace ifvs {

/// Growth base of the (1,2) branching recurrence T(mu) = T(mu-1) + T(mu-2).
inline constexpr double kGoldenRatio = std::numbers::phi;

/// Base of the overall O*(c^k) running-time bound, c = 1 + phi^2.
inline constexpr double kIfvsBoundBase = 1.0 + kGoldenRatio * kGoldenRatio;

/// Fib(1) = Fib(2) = 1; Fib(n) = 0 for n <= 0. Saturates at uint64 max.
constexpr std::uint64_t fibonacci(int n) {
  if (n <= 0) return 0;
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (int i = 1; i < n; ++i) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return b;
}

/// Upper bound on the number of base-case leaves of a search tree whose root
/// (after reduction) has measure mu0.
constexpr std::uint64_t leaf_bound(int mu0) { return fibonacci(mu0 + 2); }

}  // namespace ifvs
