#include "sortlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sortlab/bounds.hpp"
#include "sortlab/elementary.hpp"
#include "sortlab/error.hpp"
#include "sortlab/networks.hpp"
#include "sortlab/oracle.hpp"
#include "sortlab/shellsort.hpp"

namespace sortlab {

namespace {

// Calls fn on every permutation of 1..n.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 1u);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// Calls fn on `count` seeded random permutations with sizes in [1, max_n].
void for_random_permutations(Seed seed, std::uint64_t experiment, std::size_t count,
                             std::size_t max_n, const std::function<void(const Permutation&)>& fn) {
  for (std::size_t t = 0; t < count; ++t) {
    RandomStream stream(seed, experiment, t);
    const std::size_t n = 1 + static_cast<std::size_t>(stream.below(max_n));
    fn(random_permutation(n, stream));
  }
}

class Checker {
 public:
  void check(std::string name, const std::function<std::string()>& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string describe(const Permutation& pi) {
  return pi.size() <= 16 ? "[" + pi.to_string() + "]" : "n=" + std::to_string(pi.size());
}

}  // namespace

std::vector<CheckResult> run_verification(Seed seed) {
  Checker c;

  c.check("inversions match pairwise oracle", [&]() -> std::string {
    std::string err;
    auto test = [&](const Permutation& pi) {
      if (err.empty() && count_inversions(pi) != oracle::count_inversions_pairwise(pi.values())) {
        err = "mismatch on " + describe(pi);
      }
    };
    for (std::size_t n = 1; n <= 7; ++n) for_each_permutation(n, test);
    for_random_permutations(seed, 1, 300, 2000, test);
    return err;
  });

  c.check("LIS and LDS match DP oracle", [&]() -> std::string {
    std::string err;
    auto test = [&](const Permutation& pi) {
      if (!err.empty()) return;
      const auto lis = lis_length(pi);
      const auto lds = lds_length(pi);
      if (lis != oracle::lis_length_dp(pi.values())) err = "LIS mismatch on " + describe(pi);
      if (lds != oracle::lds_length_dp(pi.values())) err = "LDS mismatch on " + describe(pi);
      if (lis * lds < pi.size()) err = "Erdos-Szekeres violated on " + describe(pi);
    };
    for (std::size_t n = 1; n <= 7; ++n) for_each_permutation(n, test);
    for_random_permutations(seed, 2, 300, 1000, test);
    return err;
  });

  c.check("shellsort sorts, counts and decodes", [&]() -> std::string {
    std::string err;
    for (std::size_t t = 0; t < 2000 && err.empty(); ++t) {
      RandomStream stream(seed, 3, t);
      const std::size_t n = 2 + static_cast<std::size_t>(stream.below(63));
      const Permutation pi = random_permutation(n, stream);
      std::vector<std::size_t> gaps;
      for (std::size_t h = 1 + stream.below(n - 1); h > 1; h = 1 + stream.below(h - 1)) gaps.push_back(h);
      gaps.push_back(1);
      const auto seq = validate_sequence(gaps, n);
      bool h_sorted = true;
      auto result = shellsort(pi, seq, [&](std::size_t k, std::span<const std::uint32_t> list) {
        h_sorted = h_sorted && oracle::is_h_sorted(list, seq[k]);
      });
      const auto& s = result.stats;
      if (!result.sorted.is_identity()) err = "not sorted: " + describe(pi);
      else if (!h_sorted) err = "pass output not h-sorted: " + describe(pi);
      else if (s.moves != oracle::shellsort_moves_by_chains(pi.values(), seq.gaps())) err = "moves differ from chain oracle: " + describe(pi);
      else if (s.paper_comparisons != s.moves + n * seq.passes()) err = "comparison identity broken";
      else if (s.raw_comparisons < s.moves || s.raw_comparisons > s.paper_comparisons) err = "raw comparisons out of bracket";
      else if (decode_trace(result.trace) != pi) err = "trace does not decode: " + describe(pi);
    }
    return err;
  });

  c.check("bubble exchanges equal inversions", [&]() -> std::string {
    std::string err;
    auto test = [&](const Permutation& pi) {
      if (!err.empty()) return;
      const auto r = bubble_sort(pi);
      if (!r.sorted.is_identity() || r.stats.exchanges != count_inversions(pi)) err = describe(pi);
    };
    for (std::size_t n = 1; n <= 7; ++n) for_each_permutation(n, test);
    for_random_permutations(seed, 4, 200, 500, test);
    return err;
  });

  c.check("parallel stacks use LIS, queues use LDS", [&]() -> std::string {
    std::string err;
    auto test = [&](const Permutation& pi) {
      if (!err.empty()) return;
      const auto s = parallel_stack_sort(pi);
      const auto q = parallel_queue_sort(pi);
      if (s.devices_used != oracle::lis_length_dp(pi.values())) err = "stacks != LIS on " + describe(pi);
      if (q.devices_used != oracle::lds_length_dp(pi.values())) err = "queues != LDS on " + describe(pi);
      if (!s.output.is_identity() || !q.output.is_identity()) err = "unsorted output on " + describe(pi);
      if (replay(s.trace, pi) != std::vector<std::uint32_t>(s.output.values().begin(), s.output.values().end())) {
        err = "stack trace replay differs on " + describe(pi);
      }
      if (replay(q.trace, pi) != std::vector<std::uint32_t>(q.output.values().begin(), q.output.values().end())) {
        err = "queue trace replay differs on " + describe(pi);
      }
    };
    for (std::size_t n = 1; n <= 7; ++n) for_each_permutation(n, test);
    for_random_permutations(seed, 5, 200, 1000, test);
    return err;
  });

  c.check("one stack sorts exactly the 231-avoiders", [&]() -> std::string {
    std::string err;
    for (std::size_t n = 1; n <= 6 && err.empty(); ++n) {
      for_each_permutation(n, [&](const Permutation& pi) {
        if (!err.empty()) return;
        const auto k = min_sequential_stacks(pi, 3);
        const bool one = k && *k == 1;
        if (one == oracle::contains_231(pi.values())) err = describe(pi);
        const bool greedy = simulate_sequential_stacks(pi, 1, greedy_strategy()).success;
        if (greedy != one) err = "greedy disagrees on " + describe(pi);
      });
    }
    return err;
  });

  c.check("push/pop encoding decodes to the input", [&]() -> std::string {
    std::string err;
    for (std::size_t n = 1; n <= 5 && err.empty(); ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for_each_permutation(n, [&](const Permutation& pi) {
          if (!err.empty()) return;
          auto moves = find_sequential_sort(pi, k);
          if (!moves) return;
          const auto run = simulate_sequential_stacks(pi, k, scripted_strategy(*moves));
          if (!run.success) { err = "search witness fails on " + describe(pi); return; }
          const std::string bits = encode_pushpop(run.trace);
          if (bits.size() != 2 * k * n) err = "wrong code length";
          else if (decode_pushpop(bits, n, k) != pi) err = "decode differs on " + describe(pi);
        });
      }
    }
    return err;
  });

  c.check("log_divisions matches exact binomials", [&]() -> std::string {
    for (std::uint64_t cells : {1u, 2u, 3u, 17u, 256u, 4000u}) {
      for (std::uint64_t m : {0u, 1u, 10u, 99u, 1000u, 9999u}) {
        const double exact = oracle::log2_binomial_exact(m + cells - 1, cells - 1);
        if (std::abs(log_divisions(m, cells) - exact) > 1e-6) {
          return "M=" + std::to_string(m) + " cells=" + std::to_string(cells);
        }
      }
    }
    return {};
  });

  c.check("move bound is the minimal solution", [&]() -> std::string {
    for (std::uint64_t n : {8u, 64u, 1000u, 4096u}) {
      for (std::uint64_t p = 1; p <= 3; ++p) {
        const auto r = shellsort_move_bound(n, p);
        if (r.value == 0) continue;
        if (log_divisions(r.value, n * p) < r.rhs_bits || log_divisions(r.value - 1, n * p) >= r.rhs_bits) {
          return "n=" + std::to_string(n) + " p=" + std::to_string(p);
        }
      }
    }
    return {};
  });

  c.check("random permutations are reproducible", [&]() -> std::string {
    for (std::uint64_t t = 0; t < 50; ++t) {
      RandomStream a(seed, 7, t), b(seed, 7, t);
      if (random_permutation(100, a) != random_permutation(100, b)) return "trial " + std::to_string(t);
    }
    return {};
  });

  return c.take();
}

}  // namespace sortlab
