#pragma once

#include <cstdint>
#include <random>

#include "sortlab/permutation.hpp"

namespace sortlab {

/// Master seed of an experiment. Trial streams are derived from it, never drawn from it.
struct Seed {
  std::uint64_t master = 0;
};

/// SplitMix64 finalizer applied to x + golden gamma.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Stream key for trial `trial` of experiment `experiment`:
///   splitmix64(splitmix64(splitmix64(master) ^ experiment) ^ trial)
/// Depends only on the triple, so results do not depend on scheduling.
std::uint64_t derive_stream_key(Seed seed, std::uint64_t experiment, std::uint64_t trial) noexcept;

/// A reproducible random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; distributions are implemented here
/// because the standard library ones are not portable across vendors.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : engine_(key) {}
  RandomStream(Seed seed, std::uint64_t experiment, std::uint64_t trial)
      : engine_(derive_stream_key(seed, experiment, trial)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound) by rejection; no modulo bias. bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Uniform permutation of {1..n} by Fisher-Yates over the stream.
/// Throws InvalidArgument when n == 0.
Permutation random_permutation(std::size_t n, RandomStream& stream);

}  // namespace sortlab
