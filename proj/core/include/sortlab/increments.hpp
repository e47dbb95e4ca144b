#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sortlab {

/// Shellsort gaps h_1 > h_2 > ... > h_p.
///
/// The only ways to obtain one are the generators below and validate_sequence(),
/// so a held IncrementSequence is always strictly decreasing, positive and ends in 1.
class IncrementSequence {
 public:
  std::span<const std::size_t> gaps() const noexcept { return gaps_; }
  std::size_t passes() const noexcept { return gaps_.size(); }
  std::size_t operator[](std::size_t k) const noexcept { return gaps_[k]; }

  /// Largest gap; a run on n elements needs front() < n (or front() == 1).
  std::size_t front() const noexcept { return gaps_.front(); }

  std::string to_string() const;

  friend bool operator==(const IncrementSequence&, const IncrementSequence&) = default;

 private:
  explicit IncrementSequence(std::vector<std::size_t> gaps) : gaps_(std::move(gaps)) {}
  std::vector<std::size_t> gaps_;

  friend IncrementSequence validate_sequence(std::vector<std::size_t> gaps, std::size_t n);
};

/// Accepts iff strictly decreasing, every gap in [1, n-1], last gap 1.
/// The single gap 1 is also accepted for n == 1. Throws ValidationError naming the rule.
IncrementSequence validate_sequence(std::vector<std::size_t> gaps, std::size_t n);

/// Same rules, checked against a sequence already in hand (for binding to a new n).
void check_sequence_fits(const IncrementSequence& gaps, std::size_t n);

/// floor(n/2), floor(n/4), ..., 1.  Requires n >= 2.
IncrementSequence shell_sequence(std::size_t n);

/// All 2^i 3^j below floor(n/2), descending.  Requires n >= 4.
IncrementSequence pratt_sequence(std::size_t n);

/// All a^i (a+1)^j below floor(n/2), descending.  Requires n >= 4, a >= 2.
IncrementSequence chazelle_sequence(std::size_t n, std::size_t a);

inline constexpr double kDefaultTwoPassConstant = 1.72;

/// [max(2, round(c n^(1/3))), 1].  Requires n >= 8, c > 0.
IncrementSequence two_pass_sequence(std::size_t n, double c = kDefaultTwoPassConstant);

/// p gaps spaced geometrically between n and 1: round(n^((p-k)/p)) for k = 1..p,
/// with collisions pushed down so the result stays strictly decreasing.
/// Requires p >= 1 and n >= 2^p.
IncrementSequence geometric_sequence(std::size_t n, std::size_t passes);

}  // namespace sortlab
