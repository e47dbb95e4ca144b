#include "doctest.h"

#include <set>
#include <sstream>

#include "sortlab/error.hpp"
#include "sortlab/networks.hpp"
#include "sortlab/oracle.hpp"
#include "unit/support.hpp"

using namespace sortlab;
using sortlab::test::as_vector;
using sortlab::test::perm;

namespace {

// [2, 3, ..., n, 1]
Permutation rotated(std::size_t n) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t x = 2; x <= n; ++x) v.push_back(x);
  v.push_back(1);
  return Permutation(std::move(v));
}

// Phase-1 device contents from a trace: which elements were pushed where.
std::vector<std::vector<std::uint32_t>> phase_one_contents(const ParallelSortResult& r,
                                                           const Permutation& pi) {
  std::vector<std::vector<std::uint32_t>> devices(r.devices_used);
  std::size_t cursor = 0;
  for (const auto& op : r.trace.ops) {
    if (op.kind != OpKind::Push) break;
    devices[op.device].push_back(pi[cursor++]);
  }
  return devices;
}

}  // namespace

TEST_SUITE("networks") {

TEST_CASE("parallel_stack_sort examples") {
  CHECK(parallel_stack_sort(Permutation::descending(10)).devices_used == 1);
  const auto r = parallel_stack_sort(perm({2, 3, 1}));
  CHECK(r.devices_used == 2);
  CHECK(phase_one_contents(r, perm({2, 3, 1})) == std::vector<std::vector<std::uint32_t>>{{2, 1}, {3}});
  CHECK(r.output.is_identity());
  for (std::size_t n = 3; n <= 64; ++n) CHECK(parallel_stack_sort(rotated(n)).devices_used == n - 1);
}

TEST_CASE("parallel_queue_sort examples") {
  CHECK(parallel_queue_sort(Permutation::identity(10)).devices_used == 1);
  const auto r = parallel_queue_sort(perm({2, 1, 3}));
  CHECK(r.devices_used == 2);
  CHECK(phase_one_contents(r, perm({2, 1, 3})) == std::vector<std::vector<std::uint32_t>>{{2, 3}, {1}});
  for (std::size_t n = 3; n <= 64; ++n) CHECK(parallel_queue_sort(Permutation::descending(n)).devices_used == n);
}

TEST_CASE("device counts equal LIS / LDS, exhaustive n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    test::for_each_permutation(n, [&](const Permutation& pi) {
      const auto s = parallel_stack_sort(pi);
      const auto q = parallel_queue_sort(pi);
      REQUIRE(s.devices_used == oracle::lis_length_dp(pi.values()));
      REQUIRE(q.devices_used == oracle::lds_length_dp(pi.values()));
      REQUIRE(s.output.is_identity());
      REQUIRE(q.output.is_identity());
    });
  }
}

TEST_CASE("device invariants and replay on random inputs") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    const auto pi = test::random_perm(1 + (t * 13) % 700, 77 + t);
    const auto s = parallel_stack_sort(pi);
    const auto q = parallel_queue_sort(pi);
    // Top to bottom increasing on every stack; front to rear increasing on every queue.
    for (const auto& stack : phase_one_contents(s, pi)) CHECK(std::is_sorted(stack.rbegin(), stack.rend()));
    for (const auto& queue : phase_one_contents(q, pi)) CHECK(std::is_sorted(queue.begin(), queue.end()));
    CHECK(replay(s.trace, pi) == as_vector(s.output));
    CHECK(replay(q.trace, pi) == as_vector(q.output));
    CHECK(s.trace.ops.size() == 2 * pi.size());
    CHECK(s.devices_used == lis_length(pi));
    CHECK(q.devices_used == lds_length(pi));
  }
}

TEST_CASE("replay rejects illegal traces") {
  NetworkTrace t{NetworkKind::ParallelStacks, 2, 2, {{OpKind::Pop, 0}}};
  CHECK_THROWS_AS(replay(t, perm({1, 2})), IllegalMove);
  t.ops = {{OpKind::Push, 0}, {OpKind::Push, 1}, {OpKind::Push, 0}};
  CHECK_THROWS_AS(replay(t, perm({1, 2})), IllegalMove);
  t.ops = {{OpKind::Push, 5}};
  CHECK_THROWS_AS(replay(t, perm({1, 2})), IllegalMove);
}

TEST_CASE("simulate_sequential_stacks") {
  SUBCASE("greedy sorts [2,1] with one stack") {
    const auto run = simulate_sequential_stacks(perm({2, 1}), 1, greedy_strategy());
    CHECK(run.success);
    CHECK(replay(run.trace, perm({2, 1})) == std::vector<std::uint32_t>{1, 2});
  }
  SUBCASE("identity passes straight through") {
    CHECK(simulate_sequential_stacks(Permutation::identity(6), 1, greedy_strategy()).success);
  }
  SUBCASE("[2,3,1] defeats every one-stack strategy") {
    CHECK_FALSE(simulate_sequential_stacks(perm({2, 3, 1}), 1, greedy_strategy()).success);
    CHECK_FALSE(find_sequential_sort(perm({2, 3, 1}), 1).has_value());
  }
  SUBCASE("illegal moves name the step") {
    using M = SequentialMove;
    try {
      simulate_sequential_stacks(perm({1, 2}), 2, scripted_strategy({M::push_input(), M::pop(0)}));
      FAIL("expected IllegalMove");
    } catch (const IllegalMove& e) {
      CHECK(e.step() == 1);
    }
    CHECK_THROWS_AS(simulate_sequential_stacks(perm({1}), 1,
                                               scripted_strategy({M::push_input(), M::push_input()})),
                    IllegalMove);
  }
  SUBCASE("each stack sees n pushes and n pops") {
    const auto pi = perm({3, 1, 4, 2});
    auto moves = find_sequential_sort(pi, 3);
    REQUIRE(moves);
    const auto run = simulate_sequential_stacks(pi, 3, scripted_strategy(*moves));
    REQUIRE(run.success);
    for (std::uint32_t j = 0; j < 3; ++j) {
      std::size_t pushes = 0, pops = 0;
      for (const auto& op : run.trace.ops) {
        if (op.device != j) continue;
        (op.kind == OpKind::Push ? pushes : pops)++;
      }
      CHECK(pushes == 4);
      CHECK(pops == 4);
    }
    CHECK(replay(run.trace, pi) == std::vector<std::uint32_t>{1, 2, 3, 4});
  }
}

TEST_CASE("min_sequential_stacks") {
  CHECK(min_sequential_stacks(Permutation::identity(5), 3) == 1u);
  CHECK(min_sequential_stacks(perm({2, 3, 1}), 3) == 2u);
  CHECK(min_sequential_stacks(perm({2, 3, 1}), 1) == std::nullopt);
  CHECK_THROWS_AS(min_sequential_stacks(Permutation::identity(11), 2), InvalidArgument);
  CHECK_THROWS_AS(min_sequential_stacks(test::random_perm(10, 3), 3, SearchLimits{5, 10}), ResourceError);
}

TEST_CASE("n = 4: one stack exactly for the 231-avoiders, two otherwise") {
  test::for_each_permutation(4, [](const Permutation& pi) {
    const auto k = min_sequential_stacks(pi, 4);
    REQUIRE(k);
    CHECK(*k == (oracle::contains_231(pi.values()) ? 2u : 1u));
  });
}

TEST_CASE("encode_pushpop") {
  const auto one = simulate_sequential_stacks(perm({1}), 1, greedy_strategy());
  CHECK(encode_pushpop(one.trace) == "01");

  const auto par = parallel_stack_sort(perm({2, 1}));
  CHECK_THROWS_AS(encode_pushpop(par.trace), InvalidArgument);

  const auto failed = simulate_sequential_stacks(perm({2, 3, 1}), 1, greedy_strategy());
  CHECK_THROWS_AS(encode_pushpop(failed.trace), InvalidArgument);

  CHECK_THROWS_AS(decode_pushpop("0101", 1, 1), InvalidArgument);
  CHECK_THROWS_AS(decode_pushpop("10", 1, 1), InvalidArgument);
  CHECK_THROWS_AS(decode_pushpop("0x", 1, 1), InvalidArgument);
}

TEST_CASE("push/pop codes are injective and decode, exhaustive n <= 6, k <= 2") {
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::set<std::string> codes;
      std::size_t sorted = 0;
      test::for_each_permutation(n, [&](const Permutation& pi) {
        auto moves = find_sequential_sort(pi, k);
        if (!moves) return;
        const auto run = simulate_sequential_stacks(pi, k, scripted_strategy(*moves));
        REQUIRE(run.success);
        const auto bits = encode_pushpop(run.trace);
        REQUIRE(bits.size() == 2 * k * n);
        REQUIRE(decode_pushpop(bits, n, k) == pi);
        codes.insert(bits);
        ++sorted;
      });
      CHECK(codes.size() == sorted);
    }
  }
}

TEST_CASE("network trace CSV") {
  std::ostringstream out;
  write_network_trace_csv(parallel_stack_sort(perm({2, 1})).trace, out);
  CHECK(out.str() == "step,op,device\n0,push,0\n1,push,0\n2,pop,0\n3,pop,0\n");
}

}  // TEST_SUITE
