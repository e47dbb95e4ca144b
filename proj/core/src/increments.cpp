#include "sortlab/increments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sortlab/error.hpp"

namespace sortlab {

std::string IncrementSequence::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < gaps_.size(); ++k) {
    if (k) out.push_back(' ');
    out += std::to_string(gaps_[k]);
  }
  return out;
}

IncrementSequence validate_sequence(std::vector<std::size_t> gaps, std::size_t n) {
  if (n == 0) throw ValidationError("n must be at least 1");
  if (gaps.empty()) throw ValidationError("sequence is empty");
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    const std::size_t h = gaps[k];
    if (h == 0) throw ValidationError("gaps must be positive (gap " + std::to_string(k + 1) + " is 0)");
    if (h > 1 && h >= n) {
      throw ValidationError("gap " + std::to_string(h) + " is not below n = " + std::to_string(n));
    }
    if (k > 0 && gaps[k - 1] <= h) {
      throw ValidationError("not strictly decreasing at gap " + std::to_string(k + 1) + " (" +
                            std::to_string(gaps[k - 1]) + " then " + std::to_string(h) + ")");
    }
  }
  if (gaps.back() != 1) throw ValidationError("must end in 1");
  return IncrementSequence(std::move(gaps));
}

void check_sequence_fits(const IncrementSequence& gaps, std::size_t n) {
  validate_sequence(std::vector<std::size_t>(gaps.gaps().begin(), gaps.gaps().end()), n);
}

IncrementSequence shell_sequence(std::size_t n) {
  if (n < 2) throw InvalidArgument("shell_sequence requires n >= 2");
  std::vector<std::size_t> gaps;
  for (std::size_t h = n / 2; h >= 1; h /= 2) gaps.push_back(h);
  return validate_sequence(std::move(gaps), n);
}

namespace {

// Every a^i b^j strictly below limit, descending.
std::vector<std::size_t> smooth_numbers_below(std::size_t a, std::size_t b, std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t x = 1; x < limit; x *= a) {
    for (std::size_t y = x; y < limit; y *= b) out.push_back(y);
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

IncrementSequence pratt_sequence(std::size_t n) {
  if (n < 4) throw InvalidArgument("pratt_sequence requires n >= 4");
  return validate_sequence(smooth_numbers_below(2, 3, n / 2), n);
}

IncrementSequence chazelle_sequence(std::size_t n, std::size_t a) {
  if (n < 4) throw InvalidArgument("chazelle_sequence requires n >= 4");
  if (a < 2) throw InvalidArgument("chazelle_sequence requires a >= 2");
  return validate_sequence(smooth_numbers_below(a, a + 1, n / 2), n);
}

IncrementSequence two_pass_sequence(std::size_t n, double c) {
  if (n < 8) throw InvalidArgument("two_pass_sequence requires n >= 8");
  if (!(c > 0.0)) throw InvalidArgument("two_pass_sequence requires c > 0");
  const auto h = static_cast<std::size_t>(std::llround(c * std::cbrt(static_cast<double>(n))));
  return validate_sequence({std::max<std::size_t>(2, h), 1}, n);
}

IncrementSequence geometric_sequence(std::size_t n, std::size_t passes) {
  if (passes == 0) throw InvalidArgument("geometric_sequence requires at least one pass");
  if (passes >= 64 || n < (std::size_t{1} << passes)) {
    throw InvalidArgument("geometric_sequence requires n >= 2^passes");
  }
  std::vector<std::size_t> gaps(passes);
  gaps[passes - 1] = 1;
  for (std::size_t k = passes - 1; k-- > 0;) {
    const double exponent = static_cast<double>(passes - 1 - k) / static_cast<double>(passes);
    auto h = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), exponent)));
    gaps[k] = std::max(h, gaps[k + 1] + 1);
  }
  return validate_sequence(std::move(gaps), n);
}

}  // namespace sortlab
