#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sortlab {

/// A bijection of {1..n}, stored by position (0-based storage, values 1..n).
///
/// Construction validates the bijection, so every Permutation in flight is
/// well formed and the algorithms never re-check it.
class Permutation {
 public:
  using value_type = std::uint32_t;

  /// Throws InvalidArgument unless `values` holds each of 1..n exactly once, n >= 1.
  explicit Permutation(std::vector<value_type> values);

  static Permutation identity(std::size_t n);
  static Permutation descending(std::size_t n);

  /// Parses one line of space-separated 1-based values.
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const value_type> values() const noexcept { return values_; }
  value_type operator[](std::size_t pos) const noexcept { return values_[pos]; }

  bool is_identity() const noexcept;
  Permutation reversed() const;

  /// Space-separated values, no trailing newline.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<value_type> values_;
};

/// Number of position pairs a < b with values[a] > values[b]; merge-count, O(n log n).
std::uint64_t count_inversions(const Permutation& pi);

/// Length of the longest strictly increasing subsequence (patience piles, O(n log n)).
std::size_t lis_length(const Permutation& pi);

/// Length of the longest strictly decreasing subsequence.
std::size_t lds_length(const Permutation& pi);

}  // namespace sortlab
