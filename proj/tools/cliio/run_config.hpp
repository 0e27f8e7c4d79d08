#pragma once

#include <optional>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace thermaljc::cli {

enum class Command { timeseries, epe, scan, validate, plot };
enum class Format { csv, json };

/// Everything one invocation needs. Parameter fields are lists so that scan
/// and validate can take several values; the single-point commands accept
/// exactly one.
struct RunConfig {
  Command command = Command::timeseries;

  std::vector<int> p{1};
  std::vector<double> kbar{0.1};
  std::vector<double> lbar;  ///< empty: same as kbar
  std::vector<double> delta{0.0};
  double g = 1.0;
  bool motion = true;
  double gt_max = 25.0;
  int steps = 2000;
  double epsilon_tail = 1e-12;
  int validate_times = 50;

  std::string output;  ///< empty or "-": standard output
  std::string format_name = "csv";
  Format format = Format::csv;
  std::vector<std::string> columns;
  std::string x_column = "gt";
  std::string input;
  std::string title;
  bool timestamp = true;

  /// Which of p/kbar/lbar/delta were given on the command line or in a
  /// config file (validate falls back to its grid for the rest).
  bool p_given = false;
  bool kbar_given = false;
  bool lbar_given = false;
  bool delta_given = false;

  std::vector<double> effective_lbar() const { return lbar.empty() ? kbar : lbar; }
};

/// Registers all options and subcommands on `app`, writing into `config`.
void configure_app(CLI::App& app, RunConfig& config);

/// Post-parse checks that CLI11 validators cannot express. Fills in
/// `command` and the *_given flags. Throws UsageError.
void finish_config(const CLI::App& app, RunConfig& config);

}  // namespace thermaljc::cli
