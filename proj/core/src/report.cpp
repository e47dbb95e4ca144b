#include "sortlab/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sortlab/error.hpp"

namespace sortlab {

using nlohmann::json;

std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string report_to_csv(const ExperimentReport& report) {
  std::string out = "algorithm,family,n,p,trials,metric,mean,variance,min,max\n";
  for (const auto& cell : report.cells) {
    for (const auto& m : cell.metrics) {
      out += cell.algorithm + ',' + cell.family + ',' + std::to_string(cell.n) + ',' +
             std::to_string(cell.p) + ',' + std::to_string(cell.trials) + ',' + m.metric + ',' +
             format_real(m.mean) + ',' + format_real(m.variance) + ',' + std::to_string(m.min) +
             ',' + std::to_string(m.max) + '\n';
    }
  }
  return out;
}

namespace {

json series_to_json(const SeriesSpec& s) {
  return {{"algorithm", to_string(s.algorithm)},
          {"family", to_string(s.family)},
          {"a", s.a},
          {"c", s.c},
          {"passes", s.passes},
          {"gaps", s.gaps}};
}

SeriesSpec series_from_json(const json& j) {
  SeriesSpec s;
  s.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
  if (j.contains("family")) s.family = parse_family(j.at("family").get<std::string>());
  if (j.contains("a")) s.a = j.at("a").get<std::size_t>();
  if (j.contains("c")) s.c = j.at("c").get<double>();
  if (j.contains("passes")) s.passes = j.at("passes").get<std::size_t>();
  if (j.contains("gaps")) s.gaps = j.at("gaps").get<std::vector<std::size_t>>();
  if (s.algorithm == Algorithm::Shellsort && s.family == Family::None && !s.gaps.empty()) {
    s.family = Family::Custom;
  }
  return s;
}

json spec_json(const ExperimentSpec& spec) {
  json series = json::array();
  for (const auto& s : spec.series) series.push_back(series_to_json(s));
  return {{"seed", spec.seed.master},
          {"trials", spec.trials},
          {"n_grid", spec.n_grid},
          {"series", std::move(series)}};
}

ExperimentSpec spec_from(const json& j, Seed default_seed) {
  ExperimentSpec spec;
  spec.seed = default_seed;
  if (j.contains("seed")) spec.seed.master = j.at("seed").get<std::uint64_t>();
  spec.trials = j.at("trials").get<std::uint64_t>();
  const json& grid = j.at("n_grid");
  if (grid.is_string()) {
    spec.n_grid = parse_n_grid(grid.get<std::string>());
  } else {
    spec.n_grid = grid.get<std::vector<std::uint64_t>>();
  }
  if (j.contains("series")) {
    for (const auto& s : j.at("series")) spec.series.push_back(series_from_json(s));
  } else {
    // A single-series document may put the series fields at top level.
    spec.series.push_back(series_from_json(j));
  }
  return spec;
}

json fit_json(const FitResult& f) {
  return {{"slope", f.slope},
          {"intercept", f.intercept},
          {"r_squared", f.r_squared},
          {"slope_ci", {f.slope_ci_low, f.slope_ci_high}}};
}

}  // namespace

std::string spec_to_json(const ExperimentSpec& spec) { return spec_json(spec).dump(2) + '\n'; }

ExperimentSpec spec_from_json(std::string_view text, Seed default_seed) {
  try {
    return spec_from(json::parse(text), default_seed);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad experiment spec: ") + e.what());
  }
}

std::string report_to_json(const ExperimentReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    json metrics = json::array();
    for (const auto& m : c.metrics) {
      metrics.push_back({{"metric", m.metric},
                         {"mean", m.mean},
                         {"variance", m.variance},
                         {"min", m.min},
                         {"max", m.max},
                         {"sum", m.sum}});
    }
    cells.push_back({{"series", c.series},
                     {"algorithm", c.algorithm},
                     {"family", c.family},
                     {"n", c.n},
                     {"p", c.p},
                     {"trials", c.trials},
                     {"gaps", c.gaps},
                     {"metrics", std::move(metrics)}});
  }
  json fits = json::array();
  for (const auto& f : report.fits) {
    json entry = fit_json(f.fit);
    entry["series"] = f.series;
    entry["metric"] = f.metric;
    fits.push_back(std::move(entry));
  }
  json doc{{"tool", report.tool},
           {"version", report.version},
           {"spec", spec_json(report.spec)},
           {"cells", std::move(cells)},
           {"fits", std::move(fits)}};
  return doc.dump(2) + '\n';
}

ExperimentReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    ExperimentReport r;
    r.tool = doc.at("tool").get<std::string>();
    r.version = doc.at("version").get<std::string>();
    r.spec = spec_from(doc.at("spec"), {});
    for (const auto& c : doc.at("cells")) {
      CellResult cell;
      cell.series = c.at("series").get<std::size_t>();
      cell.algorithm = c.at("algorithm").get<std::string>();
      cell.family = c.at("family").get<std::string>();
      cell.n = c.at("n").get<std::uint64_t>();
      cell.p = c.at("p").get<std::uint64_t>();
      cell.trials = c.at("trials").get<std::uint64_t>();
      cell.gaps = c.at("gaps").get<std::vector<std::size_t>>();
      for (const auto& m : c.at("metrics")) {
        cell.metrics.push_back({m.at("metric").get<std::string>(), m.at("mean").get<double>(),
                                m.at("variance").get<double>(), m.at("min").get<std::uint64_t>(),
                                m.at("max").get<std::uint64_t>(), m.at("sum").get<std::uint64_t>()});
      }
      r.cells.push_back(std::move(cell));
    }
    for (const auto& f : doc.at("fits")) {
      SeriesFit fit;
      fit.series = f.at("series").get<std::size_t>();
      fit.metric = f.at("metric").get<std::string>();
      fit.fit.slope = f.at("slope").get<double>();
      fit.fit.intercept = f.at("intercept").get<double>();
      fit.fit.r_squared = f.at("r_squared").get<double>();
      fit.fit.slope_ci_low = f.at("slope_ci").at(0).get<double>();
      fit.fit.slope_ci_high = f.at("slope_ci").at(1).get<double>();
      r.fits.push_back(std::move(fit));
    }
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad report document: ") + e.what());
  }
}

std::string report_plot_data(const ExperimentReport& report) {
  std::string out;
  for (std::size_t s = 0; s < report.spec.series.size(); ++s) {
    const auto& series = report.spec.series[s];
    const std::string metric = metric_names(series.algorithm).front();
    if (!out.empty()) out += '\n';
    out += "# series " + std::to_string(s) + ' ' + to_string(series.algorithm);
    if (series.algorithm == Algorithm::Shellsort) out += std::string(" ") + to_string(series.family);
    out += ' ' + metric + '\n';
    for (const auto& cell : report.cells) {
      if (cell.series != s) continue;
      const double mean = cell.metric(metric).mean;
      if (!(mean > 0.0)) continue;
      out += format_real(std::log2(static_cast<double>(cell.n))) + ' ' +
             format_real(std::log2(mean)) + '\n';
    }
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sortlab
