#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sortlab/harness.hpp"

namespace sortlab {

/// Header "algorithm,family,n,p,trials,metric,mean,variance,min,max", then one
/// row per (cell, metric). Reals are written in shortest round-trip form.
std::string report_to_csv(const ExperimentReport& report);

/// Same cells plus sums, gaps, fitted exponents and the full spec.
std::string report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(std::string_view text);

/// Two columns "log2(n) log2(mean)" of each series' headline metric, one
/// block per series separated by blank lines and introduced by a # comment.
std::string report_plot_data(const ExperimentReport& report);

std::string spec_to_json(const ExperimentSpec& spec);
/// Accepts "n_grid" as an array or a grid string ("2^8..2^14"). A missing
/// "seed" leaves spec.seed untouched. Throws ConfigError on a bad document.
ExperimentSpec spec_from_json(std::string_view text, Seed default_seed = {});

/// Shortest decimal form that reads back to the same double.
std::string format_real(double x);

/// Writes `content` to `path`, throwing IoError when that fails.
void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace sortlab
