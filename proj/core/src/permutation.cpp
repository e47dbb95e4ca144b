#include "sortlab/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sortlab/error.hpp"

namespace sortlab {

Permutation::Permutation(std::vector<value_type> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n == 0) throw InvalidArgument("permutation must have n >= 1");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const value_type v = values_[pos];
    if (v < 1 || v > n) {
      throw InvalidArgument("permutation value " + std::to_string(v) + " at position " +
                            std::to_string(pos + 1) + " is outside 1.." + std::to_string(n));
    }
    if (seen[v]) throw InvalidArgument("permutation value " + std::to_string(v) + " repeats");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), value_type{1});
  return Permutation(std::move(v));
}

Permutation Permutation::descending(std::size_t n) {
  std::vector<value_type> v(n);
  std::iota(v.rbegin(), v.rend(), value_type{1});
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<value_type> v;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r' || *p == ',')) ++p;
    if (p == end) break;
    value_type x{};
    auto [next, ec] = std::from_chars(p, end, x);
    if (ec != std::errc{}) {
      throw InvalidArgument("cannot parse permutation near '" +
                            std::string(p, std::min<std::size_t>(16, end - p)) + "'");
    }
    v.push_back(x);
    p = next;
  }
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<value_type>(values_.rbegin(), values_.rend()));
}

std::string Permutation::to_string() const {
  std::string out;
  out.reserve(values_.size() * 4);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(values_[i]);
  }
  return out;
}

namespace {

std::uint64_t merge_count(std::vector<std::uint32_t>& a, std::vector<std::uint32_t>& buf,
                          std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (a[i] < a[j]) {
      buf[out++] = a[i++];
    } else {
      // a[j] jumps ahead of every element still waiting in the left half.
      count += mid - i;
      buf[out++] = a[j++];
    }
  }
  while (i < mid) buf[out++] = a[i++];
  while (j < hi) buf[out++] = a[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
  return count;
}

template <typename Less>
std::size_t patience_piles(std::span<const std::uint32_t> values, Less less) {
  // tops[i] is the smallest possible tail of an increasing run of length i+1.
  std::vector<std::uint32_t> tops;
  for (auto v : values) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v, less);
    if (it == tops.end()) {
      tops.push_back(v);
    } else {
      *it = v;
    }
  }
  return tops.size();
}

}  // namespace

std::uint64_t count_inversions(const Permutation& pi) {
  std::vector<std::uint32_t> a(pi.values().begin(), pi.values().end());
  std::vector<std::uint32_t> buf(a.size());
  return merge_count(a, buf, 0, a.size());
}

std::size_t lis_length(const Permutation& pi) {
  return patience_piles(pi.values(), std::less<>{});
}

std::size_t lds_length(const Permutation& pi) {
  return patience_piles(pi.values(), std::greater<>{});
}

}  // namespace sortlab
