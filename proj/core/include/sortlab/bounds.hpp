#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sortlab {

/// A solved bit-budget inequality lhs(value) >= rhs.
///
/// `value` is the smallest integer satisfying it (M, k or T), `lhs_bits` is the
/// left side evaluated at `value` and `rhs_bits` the required budget.
struct BudgetResult {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t value = 0;
  double lhs_bits = 0.0;
  double rhs_bits = 0.0;
  /// Set when the inputs lie outside the regime the bound was derived for.
  std::optional<std::string> warning;
};

/// log2 n! via log-gamma.
double log2_factorial(std::uint64_t n);

/// log2 of the number of ways to split M into `cells` ordered nonnegative
/// summands, log2 C(M + cells - 1, cells - 1), via log-gamma.
double log_divisions(std::uint64_t moves, std::uint64_t cells);

/// Smallest M with log_divisions(M, n p) >= log2 n! - 4 log2 n (0 when the right
/// side is not positive). The O(1) slack of the inequality is taken as 0.
/// p outside [1, log2 n] is still solved but carries a regime warning.
BudgetResult shellsort_move_bound(std::uint64_t n, std::uint64_t p);

/// Smallest k with 2kn >= log2 n! - log2 n, clamped to at least 1.
BudgetResult sequential_stack_bound(std::uint64_t n);

/// Smallest T with 2n log2 T >= log2 n! - log2 n; holds for parallel stacks
/// and parallel queues alike.
BudgetResult parallel_device_bound(std::uint64_t n);

/// e * sqrt(n), the longest increasing subsequence a log n-incompressible
/// permutation can have.
double lis_upper_bound(std::uint64_t n);

}  // namespace sortlab
