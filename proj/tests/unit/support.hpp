#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "sortlab/permutation.hpp"
#include "sortlab/rng.hpp"

namespace sortlab::test {

inline Permutation perm(std::initializer_list<std::uint32_t> values) {
  return Permutation(std::vector<std::uint32_t>(values));
}

inline void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 1u);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

inline Permutation random_perm(std::size_t n, std::uint64_t key) {
  RandomStream stream(key);
  return random_permutation(n, stream);
}

inline std::vector<std::uint32_t> as_vector(const Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

}  // namespace sortlab::test
