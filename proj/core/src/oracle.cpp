#include "sortlab/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace sortlab::oracle {

std::uint64_t count_inversions_pairwise(std::span<const std::uint32_t> values) {
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      if (values[a] > values[b]) ++count;
    }
  }
  return count;
}

namespace {

template <typename Before>
std::size_t longest_chain_dp(std::span<const std::uint32_t> values, Before before) {
  std::vector<std::size_t> best(values.size(), 1);
  std::size_t overall = 0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (before(values[i], values[j])) best[j] = std::max(best[j], best[i] + 1);
    }
    overall = std::max(overall, best[j]);
  }
  return overall;
}

double log2_big(const boost::multiprecision::cpp_int& x) {
  // Keep the top 64 significant bits; the rest only perturbs the result below 2^-60.
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 64) return std::log2(static_cast<double>(static_cast<std::uint64_t>(x)));
  const std::size_t shift = bits - 64;
  const auto top = static_cast<std::uint64_t>(x >> shift);
  return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

}  // namespace

std::size_t lis_length_dp(std::span<const std::uint32_t> values) {
  return longest_chain_dp(values, [](auto a, auto b) { return a < b; });
}

std::size_t lds_length_dp(std::span<const std::uint32_t> values) {
  return longest_chain_dp(values, [](auto a, auto b) { return a > b; });
}

bool contains_231(std::span<const std::uint32_t> values) {
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (values[j] <= values[i]) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (values[k] < values[i]) return true;
      }
    }
  }
  return false;
}

bool is_h_sorted(std::span<const std::uint32_t> values, std::size_t h) {
  for (std::size_t pos = h; pos < values.size(); ++pos) {
    if (values[pos - h] > values[pos]) return false;
  }
  return true;
}

std::uint64_t shellsort_moves_by_chains(std::span<const std::uint32_t> values,
                                        std::span<const std::size_t> gaps) {
  std::vector<std::uint32_t> a(values.begin(), values.end());
  std::uint64_t moves = 0;
  for (std::size_t h : gaps) {
    for (std::size_t start = 0; start < h && start < a.size(); ++start) {
      std::vector<std::uint32_t> chain;
      for (std::size_t pos = start; pos < a.size(); pos += h) chain.push_back(a[pos]);
      moves += count_inversions_pairwise(chain);
      std::sort(chain.begin(), chain.end());
      std::size_t idx = 0;
      for (std::size_t pos = start; pos < a.size(); pos += h) a[pos] = chain[idx++];
    }
  }
  return moves;
}

double log2_binomial_exact(std::uint64_t top, std::uint64_t bottom) {
  using boost::multiprecision::cpp_int;
  if (bottom > top) return -INFINITY;
  bottom = std::min(bottom, top - bottom);
  cpp_int value = 1;
  for (std::uint64_t i = 1; i <= bottom; ++i) {
    value *= top - bottom + i;
    value /= i;
  }
  return log2_big(value);
}

double log2_factorial_exact(std::uint64_t n) {
  boost::multiprecision::cpp_int value = 1;
  for (std::uint64_t i = 2; i <= n; ++i) value *= i;
  return log2_big(value);
}

}  // namespace sortlab::oracle
