#include "doctest.h"

#include "sortlab/elementary.hpp"
#include "sortlab/oracle.hpp"
#include "unit/support.hpp"

using namespace sortlab;
using sortlab::test::perm;

namespace {

// Sum of (final - initial) position over the elements that end up further right.
std::uint64_t net_rightward_displacement(const Permutation& pi) {
  std::uint64_t total = 0;
  for (std::size_t pos = 0; pos < pi.size(); ++pos) {
    const std::size_t final_pos = pi[pos] - 1;
    if (final_pos > pos) total += final_pos - pos;
  }
  return total;
}

// For each value, how many smaller values start to its right.
std::vector<std::uint64_t> smaller_to_the_right(const Permutation& pi) {
  std::vector<std::uint64_t> out(pi.size(), 0);
  for (std::size_t a = 0; a < pi.size(); ++a) {
    for (std::size_t b = a + 1; b < pi.size(); ++b) {
      if (pi[b] < pi[a]) ++out[pi[a] - 1];
    }
  }
  return out;
}

void check_displacements(const Permutation& pi, const BubbleResult& r) {
  REQUIRE(r.rightward_steps == smaller_to_the_right(pi));
  std::uint64_t steps = 0;
  for (auto s : r.rightward_steps) steps += s;
  REQUIRE(steps == r.stats.exchanges);
  REQUIRE(net_rightward_displacement(pi) <= r.stats.exchanges);
}

}  // namespace

TEST_SUITE("elementary") {

TEST_CASE("bubble_sort examples") {
  const auto sorted = bubble_sort(perm({1, 2, 3}));
  CHECK(sorted.stats.exchanges == 0);
  CHECK(sorted.stats.passes_executed == 1);
  CHECK(bubble_sort(perm({3, 1, 2})).stats.exchanges == 2);
  for (std::size_t n : {2u, 10u, 57u}) {
    const auto r = bubble_sort(Permutation::descending(n));
    CHECK(r.stats.exchanges == n * (n - 1) / 2);
    CHECK(r.stats.passes_executed == n - 1);
  }
  CHECK(bubble_sort(perm({1})).stats.passes_executed == 0);
}

TEST_CASE("net displacement undercounts exchanges when elements move back") {
  // 2 is carried right past 1, then 3 pushes it back left.
  const auto pi = perm({3, 2, 1});
  const auto r = bubble_sort(pi);
  CHECK(r.stats.exchanges == 3);
  CHECK(net_rightward_displacement(pi) == 2);
  CHECK(r.rightward_steps == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("exchanges equal inversions and rightward steps, exhaustive n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    test::for_each_permutation(n, [&](const Permutation& pi) {
      const auto r = bubble_sort(pi);
      REQUIRE(r.sorted.is_identity());
      REQUIRE(r.stats.exchanges == oracle::count_inversions_pairwise(pi.values()));
      check_displacements(pi, r);
      REQUIRE(r.stats.exchanges <= n * (n - 1) / 2);
      REQUIRE(r.stats.passes_executed + 1 <= std::max<std::size_t>(n, 1));
    });
  }
}

TEST_CASE("exchanges equal inversions on random inputs") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto pi = test::random_perm(1 + (t * 37) % 1500, 1000 + t);
    const auto r = bubble_sort(pi);
    CHECK(r.stats.exchanges == count_inversions(pi));
    check_displacements(pi, r);
  }
}

TEST_CASE("mean exchanges approach n(n-1)/4") {
  constexpr std::size_t n = 200;
  constexpr int trials = 2000;
  double sum = 0, sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    RandomStream s(Seed{8}, n, static_cast<std::uint64_t>(t));
    const double x = static_cast<double>(bubble_sort(random_permutation(n, s)).stats.exchanges);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / trials;
  const double var = (sum_sq - sum * mean) / (trials - 1);
  const double se = std::sqrt(var / trials);
  CHECK(std::abs(mean - n * (n - 1) / 4.0) <= 3 * se);
}

}  // TEST_SUITE
