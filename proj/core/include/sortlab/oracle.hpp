#pragma once

// Brute-force reference implementations. Each one takes the most direct route
// to its answer and shares no code with the fast paths it is used to check.

#include <cstdint>
#include <span>
#include <vector>

#include "sortlab/permutation.hpp"

namespace sortlab::oracle {

/// O(n^2) pairwise inversion count.
std::uint64_t count_inversions_pairwise(std::span<const std::uint32_t> values);

/// O(n^2) dynamic program over "longest increasing subsequence ending here".
std::size_t lis_length_dp(std::span<const std::uint32_t> values);
std::size_t lds_length_dp(std::span<const std::uint32_t> values);

/// True iff some i < j < k has values[k] < values[i] < values[j] (O(n^3)).
bool contains_231(std::span<const std::uint32_t> values);

/// Every h-chain (positions congruent mod h) is ascending.
bool is_h_sorted(std::span<const std::uint32_t> values, std::size_t h);

/// Shellsort move count computed pass by pass as the pairwise inversion count
/// inside each chain, with each chain then sorted by std::sort.
std::uint64_t shellsort_moves_by_chains(std::span<const std::uint32_t> values,
                                        std::span<const std::size_t> gaps);

/// log2 of the binomial coefficient C(top, bottom) via exact big-integer arithmetic.
double log2_binomial_exact(std::uint64_t top, std::uint64_t bottom);

/// log2(n!) via exact big-integer arithmetic.
double log2_factorial_exact(std::uint64_t n);

}  // namespace sortlab::oracle
