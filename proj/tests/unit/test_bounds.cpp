#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sortlab/bounds.hpp"
#include "sortlab/error.hpp"
#include "sortlab/oracle.hpp"

using namespace sortlab;

TEST_SUITE("bounds") {

TEST_CASE("log_divisions examples") {
  CHECK(log_divisions(0, 5) == 0.0);
  CHECK(log_divisions(1, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(log_divisions(10, 3) == doctest::Approx(std::log2(66.0)).epsilon(1e-12));
  CHECK(log_divisions(7, 1) == 0.0);
  CHECK_THROWS_AS(log_divisions(3, 0), InvalidArgument);
}

TEST_CASE("log_divisions agrees with exact binomials to 1e-6 bits") {
  for (std::uint64_t cells = 1; cells <= 10'000; cells = cells * 3 + 1) {
    for (std::uint64_t m = 0; m <= 10'000; m = m * 2 + 3) {
      const double exact = oracle::log2_binomial_exact(m + cells - 1, cells - 1);
      REQUIRE(std::abs(log_divisions(m, cells) - exact) <= 1e-6);
    }
  }
  CHECK(std::abs(log2_factorial(1000) - oracle::log2_factorial_exact(1000)) <= 1e-6);
}

TEST_CASE("shellsort_move_bound examples") {
  CHECK(shellsort_move_bound(2, 1).value == 0);
  const auto r = shellsort_move_bound(8, 1);
  CHECK(r.value == 2);
  CHECK(r.rhs_bits == doctest::Approx(std::log2(40320.0 / 4096.0)));
  CHECK(r.lhs_bits == doctest::Approx(std::log2(36.0)));
  CHECK_FALSE(r.warning.has_value());
  CHECK(shellsort_move_bound(16, 1).value == 17);
  CHECK(shellsort_move_bound(64, 2).value == 151);
  CHECK(shellsort_move_bound(8, 4).warning.has_value());
  CHECK_THROWS_AS(shellsort_move_bound(1, 1), InvalidArgument);
}

TEST_CASE("shellsort_move_bound is minimal") {
  for (std::uint64_t n = 4; n <= 1u << 14; n = n * 3 / 2 + 1) {
    for (std::uint64_t p = 1; p <= 3; ++p) {
      const auto r = shellsort_move_bound(n, p);
      if (r.value == 0) {
        CHECK(r.rhs_bits <= 0.0);
        continue;
      }
      CHECK(log_divisions(r.value, n * p) >= r.rhs_bits);
      CHECK(log_divisions(r.value - 1, n * p) < r.rhs_bits);
      CHECK(r.lhs_bits >= r.rhs_bits);
    }
  }
}

TEST_CASE("shellsort_move_bound scales as p n^(1+1/p)") {
  // Measured over n = 2^10..2^16: p=1 0.133..0.136, p=2 0.205..0.222, p=3 0.214..0.252.
  const double lo[] = {0.12, 0.19, 0.20};
  const double hi[] = {0.15, 0.24, 0.27};
  for (std::uint64_t p = 1; p <= 3; ++p) {
    std::uint64_t previous = 0;
    for (int k = 10; k <= 16; ++k) {
      const std::uint64_t n = std::uint64_t{1} << k;
      const auto value = shellsort_move_bound(n, p).value;
      const double ratio = static_cast<double>(value) /
                           (static_cast<double>(p) * std::pow(static_cast<double>(n), 1.0 + 1.0 / p));
      CHECK(ratio >= lo[p - 1]);
      CHECK(ratio <= hi[p - 1]);
      CHECK(value >= previous);
      previous = value;
    }
  }
}

TEST_CASE("sequential_stack_bound") {
  CHECK(sequential_stack_bound(2).value == 1);
  CHECK(sequential_stack_bound(1024).value == 5);
  CHECK(sequential_stack_bound(1024).rhs_bits == doctest::Approx(8759.006).epsilon(1e-6));
  double previous_gap = 1.0;
  for (int k = 8; k <= 20; ++k) {
    const auto r = sequential_stack_bound(std::uint64_t{1} << k);
    const double ratio = static_cast<double>(r.value) / (k / 2.0);
    CHECK(ratio >= 0.8);
    CHECK(ratio <= 1.2);
    // Before rounding up, the ratio climbs toward 1.
    const double raw = r.rhs_bits / (2.0 * std::ldexp(1.0, k)) / (k / 2.0);
    CHECK(1.0 - raw < previous_gap);
    previous_gap = 1.0 - raw;
  }
}

TEST_CASE("parallel_device_bound") {
  CHECK(parallel_device_bound(2).value == 1);
  CHECK(parallel_device_bound(1024).value == 20);
  for (int k = 8; k <= 20; ++k) {
    const double n = std::ldexp(1.0, k);
    const auto r = parallel_device_bound(static_cast<std::uint64_t>(n));
    const double ratio = static_cast<double>(r.value) / std::sqrt(n / std::numbers::e);
    CHECK(ratio >= 1.0);
    CHECK(ratio <= 1.05);
    CHECK(r.lhs_bits >= r.rhs_bits);
    if (r.value > 1) CHECK(2.0 * n * std::log2(r.value - 1.0) < r.rhs_bits);
  }
}

TEST_CASE("lis_upper_bound") {
  CHECK(lis_upper_bound(1) == doctest::Approx(std::numbers::e));
  CHECK(lis_upper_bound(10000) == doctest::Approx(271.828).epsilon(1e-5));
  CHECK_THROWS_AS(lis_upper_bound(0), InvalidArgument);
}

}  // TEST_SUITE
