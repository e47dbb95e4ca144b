#include "sortlab/elementary.hpp"

#include <utility>
#include <vector>

namespace sortlab {

BubbleResult bubble_sort(const Permutation& pi) {
  std::vector<std::uint32_t> a(pi.values().begin(), pi.values().end());
  BubbleStats stats;
  const std::size_t n = a.size();
  std::vector<std::uint64_t> rightward(n, 0);
  for (std::size_t end = n; end > 1; --end) {
    ++stats.passes_executed;
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < end; ++i) {
      ++stats.comparisons;
      if (a[i] > a[i + 1]) {
        ++rightward[a[i] - 1];
        std::swap(a[i], a[i + 1]);
        ++stats.exchanges;
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return {Permutation(std::move(a)), stats, std::move(rightward)};
}

}  // namespace sortlab
