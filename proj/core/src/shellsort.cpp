#include "sortlab/shellsort.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sortlab/error.hpp"

namespace sortlab {

PassTrace::PassTrace(IncrementSequence gaps, std::size_t n)
    : gaps_(std::move(gaps)), n_(n), m_(n * gaps_.passes(), 0) {}

PassTrace::PassTrace(IncrementSequence gaps, std::size_t n, std::vector<std::uint32_t> m)
    : gaps_(std::move(gaps)), n_(n), m_(std::move(m)) {
  if (m_.size() != n_ * gaps_.passes()) {
    throw CorruptTrace("trace holds " + std::to_string(m_.size()) + " entries, expected n*p = " +
                       std::to_string(n_ * gaps_.passes()));
  }
  try {
    check_sequence_fits(gaps_, n_);
  } catch (const ValidationError& e) {
    throw CorruptTrace(std::string("trace gaps do not fit n: ") + e.what());
  }
}

namespace {

// One insertion sort per chain, all chains of a pass interleaved. If `m` is
// non-null it receives each element's shift count for the pass.
void shell_pass(std::vector<std::uint32_t>& a, std::size_t h, std::size_t pass,
                std::size_t passes, std::uint32_t* m, SortStats& stats) {
  const std::size_t n = a.size();
  std::uint64_t pass_moves = 0;
  std::uint64_t compares = 0;
  for (std::size_t i = h; i < n; ++i) {
    const std::uint32_t x = a[i];
    std::size_t j = i;
    std::uint32_t shifts = 0;
    while (j >= h) {
      ++compares;
      if (a[j - h] <= x) break;
      a[j] = a[j - h];
      j -= h;
      ++shifts;
    }
    a[j] = x;
    pass_moves += shifts;
    if (m) m[(x - 1) * passes + pass] = shifts;
  }
  stats.per_pass_moves[pass] = pass_moves;
  stats.moves += pass_moves;
  stats.raw_comparisons += compares;
}

SortStats run_shellsort(std::vector<std::uint32_t>& a, const IncrementSequence& gaps,
                        std::uint32_t* m, const PassObserver* observer) {
  check_sequence_fits(gaps, a.size());
  SortStats stats;
  const std::size_t p = gaps.passes();
  stats.per_pass_moves.assign(p, 0);
  for (std::size_t k = 0; k < p; ++k) {
    shell_pass(a, gaps[k], k, p, m, stats);
    if (observer && *observer) (*observer)(k, a);
  }
  stats.paper_comparisons = stats.moves + static_cast<std::uint64_t>(a.size()) * p;
  return stats;
}

}  // namespace

ShellsortResult shellsort(const Permutation& pi, const IncrementSequence& gaps,
                          const PassObserver& observer) {
  std::vector<std::uint32_t> a(pi.values().begin(), pi.values().end());
  std::vector<std::uint32_t> m(a.size() * gaps.passes(), 0);
  SortStats stats = run_shellsort(a, gaps, m.data(), &observer);
  return {Permutation(std::move(a)), PassTrace(gaps, pi.size(), std::move(m)), std::move(stats)};
}

SortStats shellsort_stats(const Permutation& pi, const IncrementSequence& gaps) {
  std::vector<std::uint32_t> a(pi.values().begin(), pi.values().end());
  return run_shellsort(a, gaps, nullptr, nullptr);
}

Permutation decode_trace(const PassTrace& trace) {
  const std::size_t n = trace.n();
  const std::size_t p = trace.passes();
  std::vector<std::uint32_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::uint32_t>(i + 1);

  std::vector<std::uint32_t> chain;
  std::vector<std::uint32_t> rebuilt;
  for (std::size_t k = p; k-- > 0;) {
    const std::size_t h = trace.gaps()[k];
    for (std::size_t start = 0; start < h && start < n; ++start) {
      chain.clear();
      for (std::size_t pos = start; pos < n; pos += h) chain.push_back(a[pos]);
      // Pass k leaves every chain ascending; anything else cannot be its output.
      if (!std::is_sorted(chain.begin(), chain.end())) {
        throw CorruptTrace("pass " + std::to_string(k + 2) + " input is not " +
                           std::to_string(h) + "-sorted");
      }
      rebuilt.clear();
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const std::uint32_t larger_left = trace.at(*it, k);
        if (larger_left > rebuilt.size()) {
          throw CorruptTrace("m(" + std::to_string(*it) + "," + std::to_string(k + 1) + ") = " +
                             std::to_string(larger_left) + " exceeds the " +
                             std::to_string(rebuilt.size()) + " larger elements in its chain");
        }
        rebuilt.insert(rebuilt.begin() + larger_left, *it);
      }
      std::size_t idx = 0;
      for (std::size_t pos = start; pos < n; pos += h) a[pos] = rebuilt[idx++];
    }
  }
  return Permutation(std::move(a));
}

InsertionResult insertion_sort(const Permutation& pi) {
  auto gaps = validate_sequence({1}, pi.size());
  std::vector<std::uint32_t> a(pi.values().begin(), pi.values().end());
  SortStats stats = run_shellsort(a, gaps, nullptr, nullptr);
  return {Permutation(std::move(a)), std::move(stats)};
}

void write_trace_csv(const PassTrace& trace, std::ostream& out) {
  out << "element,pass,m\n";
  for (std::size_t value = 1; value <= trace.n(); ++value) {
    for (std::size_t k = 0; k < trace.passes(); ++k) {
      out << value << ',' << (k + 1) << ',' << trace.at(value, k) << '\n';
    }
  }
}

PassTrace read_trace_csv(std::istream& in, const IncrementSequence& gaps) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("element,pass,m", 0) != 0) {
    throw CorruptTrace("trace CSV must start with header element,pass,m");
  }
  struct Row { std::size_t value, pass; std::uint32_t m; };
  std::vector<Row> rows;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    Row r{};
    if (!(fields >> r.value >> r.pass >> r.m) || r.value == 0 || r.pass == 0 ||
        r.pass > gaps.passes()) {
      throw CorruptTrace("bad trace row: " + line);
    }
    n = std::max(n, r.value);
    rows.push_back(r);
  }
  std::vector<std::uint32_t> m(n * gaps.passes(), 0);
  std::vector<bool> filled(m.size(), false);
  for (const Row& r : rows) {
    const std::size_t idx = (r.value - 1) * gaps.passes() + (r.pass - 1);
    if (filled[idx]) throw CorruptTrace("duplicate trace row for element " + std::to_string(r.value));
    filled[idx] = true;
    m[idx] = r.m;
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
    throw CorruptTrace("trace CSV is missing rows");
  }
  return PassTrace(gaps, n, std::move(m));
}

}  // namespace sortlab
