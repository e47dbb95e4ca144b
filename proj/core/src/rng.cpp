#include "sortlab/rng.hpp"

#include <utility>
#include <vector>

#include "sortlab/error.hpp"

namespace sortlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_stream_key(Seed seed, std::uint64_t experiment, std::uint64_t trial) noexcept {
  return splitmix64(splitmix64(splitmix64(seed.master) ^ experiment) ^ trial);
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("RandomStream::below requires bound > 0");
  // 2^64 mod bound; draws below it would over-represent the low residues.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

Permutation random_permutation(std::size_t n, RandomStream& stream) {
  if (n == 0) throw InvalidArgument("random_permutation requires n >= 1");
  std::vector<Permutation::value_type> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Permutation::value_type>(i + 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(stream.below(i + 1));
    std::swap(v[i], v[j]);
  }
  return Permutation(std::move(v));
}

}  // namespace sortlab
