#include "sortlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "sortlab/elementary.hpp"
#include "sortlab/error.hpp"
#include "sortlab/networks.hpp"
#include "sortlab/shellsort.hpp"

#ifndef SORTLAB_VERSION
#define SORTLAB_VERSION "0.0.0"
#endif

namespace sortlab {

const char* version() noexcept { return SORTLAB_VERSION; }

const char* to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Shellsort: return "shellsort";
    case Algorithm::Insertion: return "insertion";
    case Algorithm::Bubble: return "bubble";
    case Algorithm::ParallelStacks: return "pstack";
    case Algorithm::ParallelQueues: return "pqueue";
  }
  return "unknown";
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::None: return "none";
    case Family::Shell: return "shell";
    case Family::Pratt: return "pratt";
    case Family::Chazelle: return "chazelle";
    case Family::TwoPass: return "twopass";
    case Family::Geometric: return "geometric";
    case Family::Custom: return "custom";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::Shellsort, Algorithm::Insertion, Algorithm::Bubble,
                 Algorithm::ParallelStacks, Algorithm::ParallelQueues}) {
    if (name == to_string(a)) return a;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::None, Family::Shell, Family::Pratt, Family::Chazelle, Family::TwoPass,
                 Family::Geometric, Family::Custom}) {
    if (name == to_string(f)) return f;
  }
  throw ConfigError("unknown increment family '" + std::string(name) + "'");
}

IncrementSequence gaps_for(const SeriesSpec& series, std::size_t n) {
  if (series.algorithm == Algorithm::Insertion) return validate_sequence({1}, n);
  if (series.algorithm != Algorithm::Shellsort) {
    throw ConfigError(std::string(to_string(series.algorithm)) + " has no increment sequence");
  }
  switch (series.family) {
    case Family::Shell: return shell_sequence(n);
    case Family::Pratt: return pratt_sequence(n);
    case Family::Chazelle: return chazelle_sequence(n, series.a);
    case Family::TwoPass: return two_pass_sequence(n, series.c);
    case Family::Geometric: return geometric_sequence(n, series.passes);
    case Family::Custom: return validate_sequence(series.gaps, n);
    case Family::None: break;
  }
  throw ConfigError("shellsort series needs an increment family");
}

std::vector<std::string> metric_names(Algorithm a) {
  switch (a) {
    case Algorithm::Shellsort:
    case Algorithm::Insertion: return {"moves", "paper_comparisons", "raw_comparisons"};
    case Algorithm::Bubble: return {"exchanges", "comparisons", "passes"};
    case Algorithm::ParallelStacks: return {"stacks_used"};
    case Algorithm::ParallelQueues: return {"queues_used"};
  }
  return {};
}

void validate(const ExperimentSpec& spec) {
  if (spec.series.empty()) throw ConfigError("experiment has no series");
  if (spec.trials < 2) throw ConfigError("trials must be at least 2");
  for (std::size_t i = 0; i < spec.n_grid.size(); ++i) {
    const auto n = spec.n_grid[i];
    if (n == 0) throw ConfigError("n_grid entries must be positive");
    if (n > kMaxExperimentN) {
      throw ConfigError("n = " + std::to_string(n) + " exceeds the 64-bit counter cap " +
                        std::to_string(kMaxExperimentN));
    }
    if (i > 0 && spec.n_grid[i - 1] >= n) throw ConfigError("n_grid must be strictly increasing");
  }
  for (const auto& s : spec.series) {
    const bool shell_like = s.algorithm == Algorithm::Shellsort || s.algorithm == Algorithm::Insertion;
    if (s.algorithm == Algorithm::Shellsort && s.family == Family::None) {
      throw ConfigError("shellsort series needs an increment family");
    }
    if (!shell_like && s.family != Family::None) {
      throw ConfigError(std::string(to_string(s.algorithm)) + " does not take an increment family");
    }
    if (!shell_like) continue;
    for (auto n : spec.n_grid) {
      try {
        (void)gaps_for(s, n);
      } catch (const ConfigError&) {
        throw;
      } catch (const Error& e) {
        throw ConfigError("series " + std::string(to_string(s.family)) + " at n = " +
                          std::to_string(n) + ": " + e.what());
      }
    }
  }
}

const MetricSummary& CellResult::metric(std::string_view name) const {
  for (const auto& m : metrics) {
    if (m.metric == name) return m;
  }
  throw InvalidArgument("cell has no metric '" + std::string(name) + "'");
}

const CellResult& ExperimentReport::cell(std::size_t series, std::uint64_t n) const {
  for (const auto& c : cells) {
    if (c.series == series && c.n == n) return c;
  }
  throw InvalidArgument("report has no cell for series " + std::to_string(series) + ", n = " +
                        std::to_string(n));
}

const SeriesFit* ExperimentReport::fit(std::size_t series, std::string_view metric) const {
  for (const auto& f : fits) {
    if (f.series == series && f.metric == metric) return &f;
  }
  return nullptr;
}

namespace {

__extension__ using Wide = unsigned __int128;

struct CellPlan {
  std::size_t series;
  std::uint64_t n;
  std::optional<IncrementSequence> gaps;
  std::size_t metric_count;
};

void run_trial(const SeriesSpec& series, const CellPlan& cell, const Permutation& pi,
               std::uint64_t* out) {
  switch (series.algorithm) {
    case Algorithm::Shellsort:
    case Algorithm::Insertion: {
      const SortStats s = shellsort_stats(pi, *cell.gaps);
      out[0] = s.moves;
      out[1] = s.paper_comparisons;
      out[2] = s.raw_comparisons;
      return;
    }
    case Algorithm::Bubble: {
      const BubbleStats s = bubble_sort(pi).stats;
      out[0] = s.exchanges;
      out[1] = s.comparisons;
      out[2] = s.passes_executed;
      return;
    }
    case Algorithm::ParallelStacks: out[0] = parallel_stack_sort(pi).devices_used; return;
    case Algorithm::ParallelQueues: out[0] = parallel_queue_sort(pi).devices_used; return;
  }
}

MetricSummary summarize(std::string name, const std::uint64_t* values, std::size_t stride,
                        std::size_t count) {
  MetricSummary s;
  s.metric = std::move(name);
  s.min = values[0];
  s.max = values[0];
  Wide sum = 0;
  Wide sum_sq = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const std::uint64_t v = values[t * stride];
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    sum += v;
    sum_sq += static_cast<Wide>(v) * v;
  }
  s.sum = static_cast<std::uint64_t>(sum);
  // Integer sums make the result independent of accumulation order.
  const long double mean = static_cast<long double>(sum) / static_cast<long double>(count);
  const long double centered =
      static_cast<long double>(sum_sq) - static_cast<long double>(sum) * mean;
  s.mean = static_cast<double>(mean);
  s.variance = static_cast<double>(std::max(0.0L, centered) / static_cast<long double>(count - 1));
  return s;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
  validate(spec);

  std::vector<CellPlan> plan;
  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const auto& series = spec.series[s];
    for (auto n : spec.n_grid) {
      CellPlan cell{s, n, std::nullopt, metric_names(series.algorithm).size()};
      if (series.algorithm == Algorithm::Shellsort || series.algorithm == Algorithm::Insertion) {
        cell.gaps = gaps_for(series, n);
      }
      plan.push_back(std::move(cell));
    }
  }

  const std::size_t trials = spec.trials;
  std::vector<std::vector<std::uint64_t>> results(plan.size());
  for (std::size_t c = 0; c < plan.size(); ++c) results[c].resize(trials * plan[c].metric_count);

  const std::size_t total = plan.size() * trials;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t job = next.fetch_add(1, std::memory_order_relaxed);
      if (job >= total) return;
      const std::size_t c = job / trials;
      const std::size_t t = job % trials;
      const CellPlan& cell = plan[c];
      RandomStream stream(spec.seed, cell.n, t);
      const Permutation pi = random_permutation(cell.n, stream);
      run_trial(spec.series[cell.series], cell, pi, &results[c][t * cell.metric_count]);
    }
  };

  std::size_t workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, total));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  ExperimentReport report;
  report.tool = "sortlab";
  report.version = version();
  report.spec = spec;
  for (std::size_t c = 0; c < plan.size(); ++c) {
    const CellPlan& cell = plan[c];
    const SeriesSpec& series = spec.series[cell.series];
    CellResult out;
    out.series = cell.series;
    out.algorithm = to_string(series.algorithm);
    out.family = to_string(series.algorithm == Algorithm::Insertion ? Family::None : series.family);
    out.n = cell.n;
    out.trials = trials;
    if (cell.gaps) {
      out.p = cell.gaps->passes();
      out.gaps.assign(cell.gaps->gaps().begin(), cell.gaps->gaps().end());
    }
    const auto names = metric_names(series.algorithm);
    for (std::size_t m = 0; m < names.size(); ++m) {
      out.metrics.push_back(summarize(names[m], results[c].data() + m, cell.metric_count, trials));
    }
    report.cells.push_back(std::move(out));
  }

  if (spec.n_grid.size() >= 3) {
    for (std::size_t s = 0; s < spec.series.size(); ++s) {
      for (const auto& name : metric_names(spec.series[s].algorithm)) {
        std::vector<std::pair<double, double>> points;
        bool positive = true;
        for (auto n : spec.n_grid) {
          const double mean = report.cell(s, n).metric(name).mean;
          positive = positive && mean > 0.0;
          points.emplace_back(static_cast<double>(n), mean);
        }
        if (positive) report.fits.push_back({s, name, fit_exponent(points)});
      }
    }
  }
  return report;
}

FitResult fit_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw InvalidArgument("fit_exponent needs at least 3 points");
  const double k = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& [n, v] : points) {
    if (!(n > 0.0) || !(v > 0.0)) throw InvalidArgument("fit_exponent needs positive n and values");
    sx += std::log2(n);
    sy += std::log2(v);
  }
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [n, v] : points) {
    const double dx = std::log2(n) - mx;
    const double dy = std::log2(v) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw InvalidArgument("fit_exponent needs at least two distinct n");
  FitResult r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  const double sse = std::max(0.0, syy - r.slope * sxy);
  r.r_squared = syy == 0.0 ? 1.0 : 1.0 - sse / syy;
  const double se = std::sqrt(sse / (k - 2.0) / sxx);
  const boost::math::students_t dist(k - 2.0);
  const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
  r.slope_ci_low = r.slope - t * se;
  r.slope_ci_high = r.slope + t * se;
  return r;
}

namespace {

std::uint64_t parse_grid_value(std::string_view token) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  token = trim(token);
  std::uint64_t base = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), base);
  if (ec != std::errc{} || p == token.data()) {
    throw ConfigError("bad n-grid value '" + std::string(token) + "'");
  }
  const char* end = token.data() + token.size();
  if (p == end) return base;
  if (*p != '^') throw ConfigError("bad n-grid value '" + std::string(token) + "'");
  std::uint64_t exponent = 0;
  auto [q, ec2] = std::from_chars(p + 1, end, exponent);
  if (ec2 != std::errc{} || q != end || exponent > 62) {
    throw ConfigError("bad n-grid exponent in '" + std::string(token) + "'");
  }
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) value *= base;
  return value;
}

}  // namespace

std::vector<std::uint64_t> parse_n_grid(std::string_view text) {
  std::vector<std::uint64_t> grid;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::uint64_t lo = parse_grid_value(item.substr(0, dots));
      const std::uint64_t hi = parse_grid_value(item.substr(dots + 2));
      if (lo == 0 || lo > hi) throw ConfigError("bad n-grid range '" + std::string(item) + "'");
      std::uint64_t v = 1;
      while (v < lo) v *= 2;
      if (v != lo) throw ConfigError("n-grid ranges run over powers of two; '" + std::string(item) + "'");
      for (; v <= hi; v *= 2) grid.push_back(v);
    } else if (!item.empty()) {
      grid.push_back(parse_grid_value(item));
    }
  }
  return grid;
}

}  // namespace sortlab
