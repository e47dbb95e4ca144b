#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sortlab/increments.hpp"
#include "sortlab/rng.hpp"

namespace sortlab {

enum class Algorithm { Shellsort, Insertion, Bubble, ParallelStacks, ParallelQueues };
enum class Family { None, Shell, Pratt, Chazelle, TwoPass, Geometric, Custom };

const char* to_string(Algorithm a) noexcept;
const char* to_string(Family f) noexcept;
Algorithm parse_algorithm(std::string_view name);
Family parse_family(std::string_view name);

/// One curve of an experiment: an algorithm, and for Shellsort its gap family.
struct SeriesSpec {
  Algorithm algorithm = Algorithm::Insertion;
  Family family = Family::None;
  std::size_t a = 2;                        // chazelle base
  double c = kDefaultTwoPassConstant;       // twopass constant
  std::size_t passes = 3;                   // geometric pass count
  std::vector<std::size_t> gaps;            // custom gaps

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// The gap sequence a Shellsort series uses at size n; insertion uses [1].
IncrementSequence gaps_for(const SeriesSpec& series, std::size_t n);

/// Names of the metrics recorded per trial, the first being the headline one.
std::vector<std::string> metric_names(Algorithm a);

/// Counters are 64-bit; every supported metric fits comfortably below this n.
inline constexpr std::uint64_t kMaxExperimentN = std::uint64_t{1} << 21;

struct ExperimentSpec {
  std::vector<SeriesSpec> series;
  std::vector<std::uint64_t> n_grid;
  std::uint64_t trials = 0;
  Seed seed;

  friend bool operator==(const ExperimentSpec& x, const ExperimentSpec& y) {
    return x.series == y.series && x.n_grid == y.n_grid && x.trials == y.trials &&
           x.seed.master == y.seed.master;
  }
};

/// Throws ConfigError on an empty series list, trials < 2, a grid that is not
/// strictly increasing, n beyond kMaxExperimentN, or gaps that do not fit n.
void validate(const ExperimentSpec& spec);

struct MetricSummary {
  std::string metric;
  double mean = 0.0;
  double variance = 0.0;  // sample variance, divisor trials - 1
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t sum = 0;

  friend bool operator==(const MetricSummary&, const MetricSummary&) = default;
};

struct CellResult {
  std::size_t series = 0;
  std::string algorithm;
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t p = 0;  // passes for Shellsort-type cells, 0 otherwise
  std::uint64_t trials = 0;
  std::vector<std::size_t> gaps;
  std::vector<MetricSummary> metrics;

  const MetricSummary& metric(std::string_view name) const;

  friend bool operator==(const CellResult&, const CellResult&) = default;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double slope_ci_low = 0.0;   // 95% Student-t interval
  double slope_ci_high = 0.0;

  friend bool operator==(const FitResult&, const FitResult&) = default;
};

struct SeriesFit {
  std::size_t series = 0;
  std::string metric;
  FitResult fit;

  friend bool operator==(const SeriesFit&, const SeriesFit&) = default;
};

struct ExperimentReport {
  std::string tool;
  std::string version;
  ExperimentSpec spec;
  std::vector<CellResult> cells;
  std::vector<SeriesFit> fits;

  const CellResult& cell(std::size_t series, std::uint64_t n) const;
  const SeriesFit* fit(std::size_t series, std::string_view metric) const;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

struct RunOptions {
  /// Worker threads; 0 means hardware concurrency. Never changes the result.
  std::size_t workers = 1;
};

/// Runs every (series, n) cell for spec.trials uniform permutations.
///
/// Trial t at size n draws its permutation from RandomStream(seed, n, t), so
/// all series of one experiment see the same permutations at a given n, and
/// aggregation is by (cell, trial) index, independent of scheduling.
ExperimentReport run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

/// Least squares on (log2 n, log2 value). Needs >= 3 points, all positive
/// (InvalidArgument otherwise). A fit with zero spread in y reports r^2 = 1.
FitResult fit_exponent(std::span<const std::pair<double, double>> points);

/// Parses grids like "2^8..2^16" (every power of two in range), "1000",
/// "256,512,2^12" or "2^8..2^12,5000".
std::vector<std::uint64_t> parse_n_grid(std::string_view text);

/// Library version string, e.g. "1.0.0".
const char* version() noexcept;

}  // namespace sortlab
