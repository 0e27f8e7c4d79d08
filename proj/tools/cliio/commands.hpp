#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliio/run_config.hpp"
#include "cliio/table.hpp"

namespace thermaljc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitValidation = 3;

/// Largest oracle deviation validate accepts.
inline constexpr double kValidateTolerance = 1e-9;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string> kTimeseriesColumns = {
    "gt", "g_eff", "x1", "x2", "x3_re", "x3_im", "x5", "x6",
    "concurrence", "purity", "energy"};
inline const std::vector<std::string> kEpeColumns = {"gt", "concurrence", "purity",
                                                     "energy"};
inline const std::vector<std::string> kScanColumns = {
    "p", "kbar", "lbar", "delta", "c_min", "c_max", "p_min", "p_max",
    "u_min", "u_max", "sudden_death_count", "sudden_death_span",
    "expected_period", "period"};

Table timeseries_table(const RunConfig& config);
Table epe_table(const RunConfig& config);
Table scan_table(const RunConfig& config);

struct ValidationRow {
  std::string label;
  double max_deviation = 0.0;
  std::string error;  ///< set when evaluation itself failed
  bool passed = false;
};

std::vector<ValidationRow> validate_grid(const RunConfig& config);

/// Writes the command's result to config.output (or `out`) and returns the
/// exit code. Throws UsageError, IoError, ParseError or library errors.
int execute(const RunConfig& config, std::ostream& out);

/// Whole command line: parse, execute, map failures to exit codes.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thermaljc::cli
