#include "sortlab/bounds.hpp"

#include <cmath>
#include <numbers>

#include "sortlab/error.hpp"

namespace sortlab {

namespace {

double log2_gamma(double x) { return std::lgamma(x) / std::numbers::ln2; }

}  // namespace

double log2_factorial(std::uint64_t n) { return log2_gamma(static_cast<double>(n) + 1.0); }

double log_divisions(std::uint64_t moves, std::uint64_t cells) {
  if (cells == 0) throw InvalidArgument("log_divisions requires cells >= 1");
  if (moves == 0 || cells == 1) return 0.0;
  const double m = static_cast<double>(moves);
  const double c = static_cast<double>(cells);
  // C(m + c - 1, c - 1) = Gamma(m + c) / (Gamma(c) Gamma(m + 1))
  const double bits = log2_gamma(m + c) - log2_gamma(c) - log2_gamma(m + 1.0);
  return bits < 0.0 ? 0.0 : bits;
}

BudgetResult shellsort_move_bound(std::uint64_t n, std::uint64_t p) {
  if (n < 2) throw InvalidArgument("shellsort_move_bound requires n >= 2");
  if (p == 0) throw InvalidArgument("shellsort_move_bound requires p >= 1");
  BudgetResult r;
  r.n = n;
  r.p = p;
  const double log_n = std::log2(static_cast<double>(n));
  if (static_cast<double>(p) > log_n) {
    r.warning = "p = " + std::to_string(p) + " exceeds log2 n = " + std::to_string(log_n) +
                "; the bound is derived for p <= log n";
  }
  r.rhs_bits = log2_factorial(n) - 4.0 * log_n;
  const std::uint64_t cells = n * p;
  if (r.rhs_bits <= 0.0) {
    r.value = 0;
    r.lhs_bits = log_divisions(0, cells);
    return r;
  }
  // Every m(i,k) is below n, so M <= p n^2 always satisfies the search range;
  // widen further only if the budget is unreachable there.
  std::uint64_t lo = 0;
  std::uint64_t hi = p * n * n;
  while (log_divisions(hi, cells) < r.rhs_bits) hi *= 2;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (log_divisions(mid, cells) >= r.rhs_bits) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  r.value = lo;
  r.lhs_bits = log_divisions(lo, cells);
  return r;
}

BudgetResult sequential_stack_bound(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("sequential_stack_bound requires n >= 2");
  BudgetResult r;
  r.n = n;
  r.rhs_bits = log2_factorial(n) - std::log2(static_cast<double>(n));
  const double two_n = 2.0 * static_cast<double>(n);
  const double k = std::ceil(r.rhs_bits / two_n);
  r.value = k < 1.0 ? 1 : static_cast<std::uint64_t>(k);
  r.lhs_bits = two_n * static_cast<double>(r.value);
  return r;
}

BudgetResult parallel_device_bound(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("parallel_device_bound requires n >= 2");
  BudgetResult r;
  r.n = n;
  r.rhs_bits = log2_factorial(n) - std::log2(static_cast<double>(n));
  const double two_n = 2.0 * static_cast<double>(n);
  const double t = std::ceil(std::exp2(r.rhs_bits / two_n));
  r.value = t < 1.0 ? 1 : static_cast<std::uint64_t>(t);
  r.lhs_bits = two_n * std::log2(static_cast<double>(r.value));
  return r;
}

double lis_upper_bound(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("lis_upper_bound requires n >= 1");
  return std::numbers::e * std::sqrt(static_cast<double>(n));
}

}  // namespace sortlab
