#include "doctest.h"

#include <filesystem>

#include "sortlab/error.hpp"
#include "sortlab/report.hpp"

using namespace sortlab;

namespace {

ExperimentSpec make_spec(std::vector<std::uint64_t> grid) {
  SeriesSpec twopass;
  twopass.algorithm = Algorithm::Shellsort;
  twopass.family = Family::TwoPass;
  SeriesSpec pstack;
  pstack.algorithm = Algorithm::ParallelStacks;
  return ExperimentSpec{{twopass, pstack}, std::move(grid), 12, Seed{77}};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("report") {

TEST_CASE("empty grid gives a header-only CSV") {
  const auto report = run_experiment(make_spec({}));
  CHECK(report_to_csv(report) == "algorithm,family,n,p,trials,metric,mean,variance,min,max\n");
}

TEST_CASE("one cell, one metric, one fully populated row") {
  auto spec = make_spec({64});
  spec.series.erase(spec.series.begin());
  const auto csv = report_to_csv(run_experiment(spec));
  REQUIRE(count_lines(csv) == 2);
  const std::string row = csv.substr(csv.find('\n') + 1);
  CHECK(row.rfind("pstack,none,64,0,12,stacks_used,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 9);
  CHECK(row.find(",,") == std::string::npos);
}

TEST_CASE("JSON round-trips the report exactly") {
  const auto report = run_experiment(make_spec({16, 32, 64}));
  REQUIRE_FALSE(report.fits.empty());
  const std::string json = report_to_json(report);
  const auto back = report_from_json(json);
  CHECK(back == report);
  CHECK(report_to_json(back) == json);
  CHECK_THROWS_AS(report_from_json("{\"tool\": 1}"), ConfigError);
}

TEST_CASE("spec JSON accepts grid strings and a default seed") {
  const auto spec = spec_from_json(
      R"({"trials": 5, "n_grid": "2^4..2^6", "series": [{"algorithm": "shellsort", "family": "chazelle", "a": 3}]})",
      Seed{4242});
  CHECK(spec.seed.master == 4242);
  CHECK(spec.n_grid == std::vector<std::uint64_t>{16, 32, 64});
  CHECK(spec.series.at(0).family == Family::Chazelle);
  CHECK(spec.series.at(0).a == 3);
  CHECK(spec_from_json(spec_to_json(spec)) == spec);

  const auto single = spec_from_json(R"({"seed": 3, "trials": 4, "n_grid": [8], "algorithm": "bubble"})");
  CHECK(single.series.size() == 1);
  CHECK(single.series[0].algorithm == Algorithm::Bubble);
  CHECK(single.seed.master == 3);

  CHECK_THROWS_AS(spec_from_json("not json"), ConfigError);
  CHECK_THROWS_AS(spec_from_json(R"({"trials": 4, "n_grid": [8], "algorithm": "quick"})"), ConfigError);
}

TEST_CASE("plot data has one block per series") {
  const auto report = run_experiment(make_spec({16, 32, 64}));
  const std::string plot = report_plot_data(report);
  CHECK(plot.rfind("# series 0 shellsort twopass moves\n4 ", 0) == 0);
  CHECK(plot.find("\n\n# series 1 pstack stacks_used\n4 ") != std::string::npos);
  CHECK(count_lines(plot) == 2 * 4 + 1);
}

TEST_CASE("format_real is shortest round-trip") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(249750.0) == "249750");
  const double x = 0.1 + 0.2;
  CHECK(std::stod(format_real(x)) == x);
}

TEST_CASE("file helpers report I/O failures") {
  CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x.csv", "a"), IoError);
  CHECK_THROWS_AS(read_text_file("/nonexistent-dir/x.csv"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "sortlab_report_test.txt";
  write_text_file(path, "hello\n");
  CHECK(read_text_file(path) == "hello\n");
  std::filesystem::remove(path);
}

}  // TEST_SUITE
