#pragma once

#include <cstdint>
#include <vector>

#include "sortlab/permutation.hpp"

namespace sortlab {

struct BubbleStats {
  /// Adjacent exchanges; equals the inversion count of the input.
  std::uint64_t exchanges = 0;
  /// Left-to-right sweeps performed, the final exchange-free sweep included.
  std::uint64_t passes_executed = 0;
  std::uint64_t comparisons = 0;

  friend bool operator==(const BubbleStats&, const BubbleStats&) = default;
};

struct BubbleResult {
  Permutation sorted;
  BubbleStats stats;
  /// rightward_steps[v-1]: exchanges that carried value v one place right.
  /// Equals the number of smaller values initially right of v, and sums to
  /// stats.exchanges. Net displacement can be smaller, since an element may
  /// be carried right and later pushed back left.
  std::vector<std::uint64_t> rightward_steps;
};

/// Bubble Sort: each sweep carries the largest unplaced element right by
/// exchanges. Sweep j stops before the j-1 elements already parked at the end;
/// sorting stops early after a sweep with no exchange.
BubbleResult bubble_sort(const Permutation& pi);

}  // namespace sortlab
