// sortlab: command-line front end for the sorting laboratory.
//
//   sortlab gen-increments --family pratt --n 1000
//   sortlab sort --algo shellsort --gaps "4 2 1" --input perm.txt --dump-trace trace.csv
//   sortlab minstacks --input perm.txt --kmax 3
//   sortlab bounds --table shellsort --n-grid "2^8..2^16" --p "1,2,3"
//   sortlab experiment --spec spec.json --out report.json --csv report.csv
//   sortlab verify
//
// Exit codes: 0 success, 1 a check or sort failed, 2 configuration or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sortlab/bounds.hpp"
#include "sortlab/elementary.hpp"
#include "sortlab/error.hpp"
#include "sortlab/harness.hpp"
#include "sortlab/increments.hpp"
#include "sortlab/networks.hpp"
#include "sortlab/permutation.hpp"
#include "sortlab/report.hpp"
#include "sortlab/rng.hpp"
#include "sortlab/shellsort.hpp"
#include "sortlab/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr const char* kSeedEnv = "SORTLAB_SEED";
constexpr std::uint64_t kBuiltinSeed = 20240917;

using namespace sortlab;

std::vector<std::size_t> parse_gaps(const std::string& text) {
  std::vector<std::size_t> gaps;
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(cleaned);
  long long g = 0;
  while (in >> g) {
    if (g <= 0) throw ValidationError("gaps must be positive");
    gaps.push_back(static_cast<std::size_t>(g));
  }
  if (!in.eof()) throw ValidationError("cannot parse gaps '" + text + "'");
  return gaps;
}

Permutation read_permutation(const std::string& path) {
  if (path == "-") {
    std::string line, all;
    while (std::getline(std::cin, line)) all += line + ' ';
    return Permutation::parse(all);
  }
  return Permutation::parse(read_text_file(path));
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_text_file(path, content);
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv); env && *env) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw ConfigError(std::string(kSeedEnv) + " is not an unsigned integer: " + env);
    }
  }
  return fallback;
}

struct IncrementOptions {
  std::string family = "shell";
  std::size_t n = 0;
  std::size_t a = 2;
  double c = kDefaultTwoPassConstant;
  std::size_t passes = 3;
  std::string gaps;
};

IncrementSequence build_sequence(const IncrementOptions& o) {
  SeriesSpec s;
  s.algorithm = Algorithm::Shellsort;
  s.family = parse_family(o.family);
  s.a = o.a;
  s.c = o.c;
  s.passes = o.passes;
  if (s.family == Family::Custom) s.gaps = parse_gaps(o.gaps);
  return gaps_for(s, o.n);
}

void print_stats(const SortStats& s) {
  std::cout << "moves=" << s.moves << "\npaper_comparisons=" << s.paper_comparisons
            << "\nraw_comparisons=" << s.raw_comparisons << "\nper_pass_moves=";
  for (std::size_t k = 0; k < s.per_pass_moves.size(); ++k) {
    std::cout << (k ? " " : "") << s.per_pass_moves[k];
  }
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sortlab: instrumented sorting laboratory"};
  app.require_subcommand(1);

  // gen-increments
  IncrementOptions inc;
  auto* gen = app.add_subcommand("gen-increments", "Print an increment sequence");
  gen->add_option("--family", inc.family, "shell|pratt|chazelle|twopass|geometric|custom")
      ->required();
  gen->add_option("--n", inc.n, "List length the sequence is for")->required();
  gen->add_option("--a", inc.a, "Base a for the chazelle family (a, a+1)");
  gen->add_option("--c", inc.c, "Constant c of the two-pass gap c*n^(1/3)");
  gen->add_option("--passes", inc.passes, "Pass count for the geometric family");
  gen->add_option("--gaps", inc.gaps, "Custom gaps, e.g. \"4 2 1\"");

  // sort
  std::string algo, input, dump_trace, gaps_text, bits_out;
  std::size_t k_stacks = 1;
  auto* sort = app.add_subcommand("sort", "Sort a permutation with counters");
  sort->add_option("--algo", algo, "shellsort|insertion|bubble|pstack|pqueue|seqstack")->required();
  sort->add_option("--input", input, "File with one line of 1-based values, or -")->required();
  sort->add_option("--gaps", gaps_text, "Shellsort gaps, e.g. \"4 2 1\"");
  sort->add_option("--dump-trace", dump_trace, "Write the trace CSV here");
  sort->add_option("--k", k_stacks, "Stack count for seqstack (greedy strategy)");
  sort->add_option("--dump-bits", bits_out, "seqstack: write the 2kn push/pop bits here");

  // decode
  std::string trace_path;
  auto* decode = app.add_subcommand("decode", "Rebuild a permutation from a Shellsort trace CSV");
  decode->add_option("--trace", trace_path, "Trace CSV (element,pass,m)")->required();
  decode->add_option("--gaps", gaps_text, "Gaps the trace was recorded with")->required();

  // minstacks
  std::size_t k_max = 4;
  bool force_large = false;
  auto* minstacks = app.add_subcommand("minstacks", "Fewest sequential stacks that sort the input");
  minstacks->add_option("--input", input, "Permutation file, or -")->required();
  minstacks->add_option("--kmax", k_max, "Largest stack count to try");
  minstacks->add_flag("--force", force_large, "Allow exhaustive search beyond n = 10");

  // bounds
  std::string table = "shellsort", n_grid_text = "2^8..2^16", p_text = "1,2,3";
  auto* bounds = app.add_subcommand("bounds", "Tabulate the lower-bound budgets as CSV");
  bounds->add_option("--table", table, "shellsort|seqstack|pdevice|lis");
  bounds->add_option("--n-grid", n_grid_text, "e.g. \"2^8..2^16\" or \"100,1000\"");
  bounds->add_option("--p", p_text, "Pass counts for the shellsort table, e.g. \"1,2,3\"");

  // random
  std::size_t random_n = 0;
  std::uint64_t trial = 0;
  std::optional<std::uint64_t> seed_flag;
  auto* random = app.add_subcommand("random", "Print a seeded uniform random permutation");
  random->add_option("--n", random_n, "Size")->required();
  random->add_option("--seed", seed_flag, "Master seed (default: $SORTLAB_SEED)");
  random->add_option("--trial", trial, "Trial index within the stream family");

  // experiment
  std::string spec_path, out_json, out_csv, out_plot;
  std::size_t workers = 1;
  auto* experiment = app.add_subcommand("experiment", "Run a seeded Monte Carlo experiment");
  experiment->add_option("--spec", spec_path, "Experiment spec JSON")->required();
  experiment->add_option("--out", out_json, "Report JSON path");
  experiment->add_option("--csv", out_csv, "Report CSV path");
  experiment->add_option("--plot", out_plot, "Plot data path (log2 n, log2 mean)");
  experiment->add_option("--workers", workers, "Worker threads (0 = all cores)");
  experiment->add_option("--seed", seed_flag, "Master seed, overrides the spec and $SORTLAB_SEED");

  // verify
  auto* verify = app.add_subcommand("verify", "Check every algorithm against its oracle");
  verify->add_option("--seed", seed_flag, "Master seed (default: $SORTLAB_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*gen) {
      std::cout << build_sequence(inc).to_string() << '\n';
      return 0;
    }

    if (*sort) {
      const Permutation pi = read_permutation(input);
      if (algo == "shellsort" || algo == "insertion") {
        const auto gaps = algo == "insertion" ? validate_sequence({1}, pi.size())
                                              : validate_sequence(parse_gaps(gaps_text), pi.size());
        auto r = shellsort(pi, gaps);
        std::cout << r.sorted.to_string() << '\n';
        print_stats(r.stats);
        if (!dump_trace.empty()) {
          std::ostringstream csv;
          write_trace_csv(r.trace, csv);
          write_or_print(dump_trace, csv.str());
        }
      } else if (algo == "bubble") {
        auto r = bubble_sort(pi);
        std::cout << r.sorted.to_string() << "\nexchanges=" << r.stats.exchanges
                  << "\npasses_executed=" << r.stats.passes_executed
                  << "\ncomparisons=" << r.stats.comparisons << '\n';
      } else if (algo == "pstack" || algo == "pqueue") {
        auto r = algo == "pstack" ? parallel_stack_sort(pi) : parallel_queue_sort(pi);
        std::cout << r.output.to_string() << '\n'
                  << (algo == "pstack" ? "stacks_used=" : "queues_used=") << r.devices_used << '\n';
        if (!dump_trace.empty()) {
          std::ostringstream csv;
          write_network_trace_csv(r.trace, csv);
          write_or_print(dump_trace, csv.str());
        }
      } else if (algo == "seqstack") {
        auto run = simulate_sequential_stacks(pi, k_stacks, greedy_strategy());
        std::cout << "success=" << (run.success ? "true" : "false") << "\noutput=";
        for (std::size_t i = 0; i < run.output.size(); ++i) std::cout << (i ? " " : "") << run.output[i];
        std::cout << '\n';
        if (!dump_trace.empty()) {
          std::ostringstream csv;
          write_network_trace_csv(run.trace, csv);
          write_or_print(dump_trace, csv.str());
        }
        if (!bits_out.empty() && run.success) write_or_print(bits_out, encode_pushpop(run.trace) + '\n');
        return run.success ? 0 : kExitFailure;
      } else {
        throw ConfigError("unknown --algo '" + algo + "'");
      }
      return 0;
    }

    if (*decode) {
      const auto gaps = parse_gaps(gaps_text);
      std::ifstream in(trace_path);
      if (!in) throw IoError("cannot open " + trace_path);
      // The gaps are validated against n once the trace size is known.
      const auto provisional = validate_sequence(gaps, gaps.front() + 1);
      const PassTrace trace = read_trace_csv(in, provisional);
      std::cout << decode_trace(trace).to_string() << '\n';
      return 0;
    }

    if (*minstacks) {
      const Permutation pi = read_permutation(input);
      SearchLimits limits;
      if (force_large) limits.max_n = pi.size();
      const auto k = min_sequential_stacks(pi, k_max, limits);
      if (k) {
        std::cout << *k << '\n';
      } else {
        std::cout << "exceeds " << k_max << '\n';
      }
      return 0;
    }

    if (*bounds) {
      const auto grid = parse_n_grid(n_grid_text);
      std::string out = "n,p,bound,rhs_bits\n";
      if (table == "shellsort") {
        std::vector<std::uint64_t> ps;
        for (auto p : parse_gaps(p_text)) ps.push_back(p);
        for (auto n : grid) {
          for (auto p : ps) {
            const auto r = shellsort_move_bound(n, p);
            if (r.warning) std::cerr << "warning: " << *r.warning << '\n';
            out += std::to_string(n) + ',' + std::to_string(p) + ',' + std::to_string(r.value) +
                   ',' + format_real(r.rhs_bits) + '\n';
          }
        }
      } else if (table == "seqstack" || table == "pdevice") {
        for (auto n : grid) {
          const auto r = table == "seqstack" ? sequential_stack_bound(n) : parallel_device_bound(n);
          out += std::to_string(n) + ",0," + std::to_string(r.value) + ',' + format_real(r.rhs_bits) + '\n';
        }
      } else if (table == "lis") {
        for (auto n : grid) out += std::to_string(n) + ",0," + format_real(lis_upper_bound(n)) + ",0\n";
      } else {
        throw ConfigError("unknown --table '" + table + "'");
      }
      std::cout << out;
      return 0;
    }

    if (*random) {
      RandomStream stream(Seed{resolve_seed(seed_flag, kBuiltinSeed)}, random_n, trial);
      std::cout << random_permutation(random_n, stream).to_string() << '\n';
      return 0;
    }

    if (*experiment) {
      const Seed fallback{resolve_seed(std::nullopt, kBuiltinSeed)};
      ExperimentSpec spec = spec_from_json(read_text_file(spec_path), fallback);
      if (seed_flag) spec.seed.master = *seed_flag;
      const ExperimentReport report = run_experiment(spec, RunOptions{workers});
      if (!out_json.empty()) write_or_print(out_json, report_to_json(report));
      if (!out_csv.empty()) write_or_print(out_csv, report_to_csv(report));
      if (!out_plot.empty()) write_or_print(out_plot, report_plot_data(report));
      if (out_json.empty() && out_csv.empty() && out_plot.empty()) std::cout << report_to_csv(report);
      return 0;
    }

    if (*verify) {
      const auto results = run_verification(Seed{resolve_seed(seed_flag, kBuiltinSeed)});
      bool ok = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << '\n';
        ok = ok && r.passed;
      }
      return ok ? 0 : kExitFailure;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ValidationError& e) {
    std::cerr << "invalid gaps: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
