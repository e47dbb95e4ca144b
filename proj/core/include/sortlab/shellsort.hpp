#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "sortlab/increments.hpp"
#include "sortlab/permutation.hpp"

namespace sortlab {

/// Exact operation counters of one instrumented sort.
struct SortStats {
  /// Data moves: total insertion shifts, the sum of every m(i,k).
  std::uint64_t moves = 0;
  /// Idealized comparisons, sum of m(i,k) + 1 over elements and passes: moves + n*p.
  std::uint64_t paper_comparisons = 0;
  /// Comparator calls actually made. A chain head and an insertion that runs
  /// to the front of its chain each skip the final comparison, so this can be
  /// smaller than paper_comparisons.
  std::uint64_t raw_comparisons = 0;
  std::vector<std::uint64_t> per_pass_moves;

  friend bool operator==(const SortStats&, const SortStats&) = default;
};

/// m(i,k) for every element value i and pass k: how many elements of i's
/// h_k-chain sit left of i and exceed it when pass k starts.
///
/// Storage is value-major. Element values are 1-based, pass indices 0-based.
class PassTrace {
 public:
  PassTrace(IncrementSequence gaps, std::size_t n);
  /// Adopts a caller-built matrix (for decoding stored traces). Throws
  /// CorruptTrace if `m` is not n*p long or the gaps do not fit n.
  PassTrace(IncrementSequence gaps, std::size_t n, std::vector<std::uint32_t> m);

  std::size_t n() const noexcept { return n_; }
  std::size_t passes() const noexcept { return gaps_.passes(); }
  const IncrementSequence& gaps() const noexcept { return gaps_; }

  std::uint32_t at(std::size_t value, std::size_t pass) const noexcept {
    return m_[(value - 1) * passes() + pass];
  }
  std::uint32_t& at(std::size_t value, std::size_t pass) noexcept {
    return m_[(value - 1) * passes() + pass];
  }
  std::span<const std::uint32_t> raw() const noexcept { return m_; }

  friend bool operator==(const PassTrace&, const PassTrace&) = default;

 private:
  IncrementSequence gaps_;
  std::size_t n_;
  std::vector<std::uint32_t> m_;
};

struct ShellsortResult {
  Permutation sorted;
  PassTrace trace;
  SortStats stats;
};

/// Called after every pass with the pass index and the list as it stands.
using PassObserver = std::function<void(std::size_t pass, std::span<const std::uint32_t> list)>;

/// p-pass Shellsort: pass k insertion-sorts each chain of positions congruent
/// mod h_k. The gaps must fit pi.size() (ValidationError otherwise).
ShellsortResult shellsort(const Permutation& pi, const IncrementSequence& gaps,
                          const PassObserver& observer = {});

/// Counters only; skips the trace matrix. Used by the experiment harness.
SortStats shellsort_stats(const Permutation& pi, const IncrementSequence& gaps);

/// Inverts a trace back to the permutation that produced it, starting from the
/// sorted list and undoing pass p, p-1, ..., 1. Within each chain the elements
/// are re-inserted from largest to smallest, each at offset m(i,k) among the
/// larger ones already placed. Throws CorruptTrace when no run could have
/// produced the trace.
Permutation decode_trace(const PassTrace& trace);

struct InsertionResult {
  Permutation sorted;
  SortStats stats;
};

/// One-pass Shellsort with gap 1; moves equals the inversion count.
InsertionResult insertion_sort(const Permutation& pi);

/// CSV with header "element,pass,m"; pass is written 1-based.
void write_trace_csv(const PassTrace& trace, std::ostream& out);
PassTrace read_trace_csv(std::istream& in, const IncrementSequence& gaps);

}  // namespace sortlab
