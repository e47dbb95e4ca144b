#include "doctest.h"

#include <cmath>

#include "sortlab/error.hpp"
#include "sortlab/increments.hpp"

using namespace sortlab;
using V = std::vector<std::size_t>;

namespace {
V gaps(const IncrementSequence& s) { return {s.gaps().begin(), s.gaps().end()}; }
}  // namespace

TEST_SUITE("increments") {

TEST_CASE("shell_sequence halves down to 1") {
  CHECK(gaps(shell_sequence(16)) == V{8, 4, 2, 1});
  CHECK(gaps(shell_sequence(2)) == V{1});
  CHECK(gaps(shell_sequence(100)) == V{50, 25, 12, 6, 3, 1});
  CHECK_THROWS_AS(shell_sequence(1), InvalidArgument);
  for (std::size_t n = 2; n < 5000; n += 7) {
    CHECK(shell_sequence(n).passes() == static_cast<std::size_t>(std::floor(std::log2(n))));
  }
}

TEST_CASE("pratt_sequence lists 2^i 3^j below n/2") {
  CHECK(gaps(pratt_sequence(20)) == V{9, 8, 6, 4, 3, 2, 1});
  CHECK(gaps(pratt_sequence(4)) == V{1});
  CHECK(gaps(pratt_sequence(100)) == V{48, 36, 32, 27, 24, 18, 16, 12, 9, 8, 6, 4, 3, 2, 1});
  CHECK_THROWS_AS(pratt_sequence(3), InvalidArgument);
}

TEST_CASE("pratt_sequence length grows as log^2 n") {
  // Measured over 2^6..2^16: the ratio stays within 0.324..0.334.
  for (int k = 6; k <= 16; ++k) {
    const double ratio = static_cast<double>(pratt_sequence(std::size_t{1} << k).passes()) / (k * k);
    CHECK(ratio >= 0.30);
    CHECK(ratio <= 0.35);
  }
}

TEST_CASE("chazelle_sequence generalizes pratt") {
  CHECK(gaps(chazelle_sequence(20, 2)) == V{9, 8, 6, 4, 3, 2, 1});
  CHECK(gaps(chazelle_sequence(100, 3)) == V{48, 36, 27, 16, 12, 9, 4, 3, 1});
  CHECK(gaps(chazelle_sequence(10, 4)) == V{4, 1});
  CHECK_THROWS_AS(chazelle_sequence(100, 1), InvalidArgument);
  CHECK_THROWS_AS(chazelle_sequence(3, 2), InvalidArgument);
  for (std::size_t n = 4; n < 3000; n += 13) CHECK(chazelle_sequence(n, 2) == pratt_sequence(n));
}

TEST_CASE("two_pass_sequence") {
  CHECK(gaps(two_pass_sequence(1000)) == V{17, 1});
  CHECK(gaps(two_pass_sequence(8, 1.0)) == V{2, 1});
  CHECK(gaps(two_pass_sequence(27000, 1.0)) == V{30, 1});
  CHECK_THROWS_AS(two_pass_sequence(7), InvalidArgument);
}

TEST_CASE("geometric_sequence spaces gaps by n^(1/p)") {
  CHECK(gaps(geometric_sequence(1000, 3)) == V{100, 10, 1});
  CHECK(gaps(geometric_sequence(256, 2)) == V{16, 1});
  CHECK(gaps(geometric_sequence(8, 3)) == V{4, 2, 1});
  CHECK_THROWS_AS(geometric_sequence(7, 3), InvalidArgument);
  CHECK_THROWS_AS(geometric_sequence(100, 0), InvalidArgument);
}

TEST_CASE("validate_sequence names the broken rule") {
  CHECK(gaps(validate_sequence({4, 2, 1}, 10)) == V{4, 2, 1});
  auto message = [](V g, std::size_t n) {
    try {
      validate_sequence(std::move(g), n);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message({4, 4, 1}, 10).find("strictly decreasing") != std::string::npos);
  CHECK(message({4, 2}, 10).find("end in 1") != std::string::npos);
  CHECK(message({10, 1}, 10).find("below n") != std::string::npos);
  CHECK(message({}, 10).find("empty") != std::string::npos);
  CHECK(message({3, 0}, 10).find("positive") != std::string::npos);
  CHECK(message({1}, 1) == "accepted");
}

TEST_CASE("every generator's output validates") {
  for (std::size_t n = 8; n < 20000; n = n * 3 / 2) {
    const auto n_ok = [&](const IncrementSequence& s) {
      CHECK_NOTHROW(validate_sequence(gaps(s), n));
    };
    n_ok(shell_sequence(n));
    n_ok(pratt_sequence(n));
    n_ok(chazelle_sequence(n, 3));
    n_ok(chazelle_sequence(n, 5));
    n_ok(two_pass_sequence(n));
    n_ok(geometric_sequence(n, 3));
  }
}

}  // TEST_SUITE
