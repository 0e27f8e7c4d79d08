#include "cliio/run_config.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <limits>

#include "cliio/commands.hpp"

namespace thermaljc::cli {

namespace {

const CLI::Validator kFinite(
    [](std::string& text) -> std::string {
      double value = 0.0;
      if (!CLI::detail::lexical_cast(text, value) || !std::isfinite(value)) {
        return "value must be a finite number";
      }
      return {};
    },
    "FINITE");

const CLI::Validator kOpenUnit(
    [](std::string& text) -> std::string {
      double value = 0.0;
      if (!CLI::detail::lexical_cast(text, value) || !(value > 0.0 && value < 1.0)) {
        return "value must lie strictly between 0 and 1";
      }
      return {};
    },
    "(0,1)");

const CLI::Validator kPositiveFinite(
    [](std::string& text) -> std::string {
      double value = 0.0;
      if (!CLI::detail::lexical_cast(text, value) || !(value > 0.0) ||
          !std::isfinite(value)) {
        return "value must be positive and finite";
      }
      return {};
    },
    "POSITIVE");

const CLI::Validator kNonNegativeFinite(
    [](std::string& text) -> std::string {
      double value = 0.0;
      if (!CLI::detail::lexical_cast(text, value) || !(value >= 0.0) ||
          !std::isfinite(value)) {
        return "value must be non-negative and finite";
      }
      return {};
    },
    "NONNEGATIVE");

}  // namespace

void configure_app(CLI::App& app, RunConfig& config) {
  app.description(
      "Entanglement, purity and energy of two moving atoms in thermal cavities.");
  app.set_config("--config", "", "Read options from a file of key=value lines");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  app.add_option("--p", config.p, "Field-mode structure parameter (comma list for scan)")
      ->delimiter(',')
      ->check(CLI::Range(1, 100000));
  app.add_option("--kbar", config.kbar, "Mean photon number of cavity A")
      ->delimiter(',')
      ->check(kNonNegativeFinite);
  app.add_option("--lbar", config.lbar, "Mean photon number of cavity B (default: kbar)")
      ->delimiter(',')
      ->check(kNonNegativeFinite);
  app.add_option("--delta", config.delta, "Detuning omega_0 - omega_c in units of g")
      ->delimiter(',')
      ->check(kFinite);
  app.add_option("--g", config.g, "Atom-field coupling")->check(kPositiveFinite);
  app.add_flag("--motion,!--no-motion", config.motion,
               "Include the atomic motion through the mode profile");
  app.add_option("--gt-max", config.gt_max, "End of the gt window")->check(kPositiveFinite);
  app.add_option("--steps", config.steps, "Number of grid intervals")
      ->check(CLI::Range(2, 100000000));
  app.add_option("--epsilon", config.epsilon_tail,
                 "Thermal tail mass allowed beyond the truncation")
      ->envname("THERMALJC_EPSILON_TAIL")
      ->check(kOpenUnit);
  app.add_option("--times", config.validate_times, "validate: time points per configuration")
      ->check(CLI::Range(1, 100000));
  app.add_option("-o,--output", config.output, "Output file (default: stdout)");
  app.add_option("--format", config.format_name, "Data format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--columns", config.columns, "plot: columns to draw")->delimiter(',');
  app.add_option("--x", config.x_column, "plot: column on the horizontal axis");
  app.add_option("-i,--input", config.input, "plot: CSV or JSON file to read");
  app.add_option("--title", config.title, "plot: title");
  app.add_flag("!--no-timestamp", config.timestamp, "Omit the timestamp from JSON metadata");

  const auto add = [&app](const char* name, const char* help) {
    app.add_subcommand(name, help)->fallthrough();
  };
  add("timeseries", "Reduced density matrix and observables versus gt");
  add("epe", "Concurrence, purity and energy trajectory");
  add("scan", "Extrema, sudden-death intervals and period for a parameter product");
  add("validate", "Compare the closed form against the brute-force oracle");
  add("plot", "Render columns of a CSV/JSON file as an SVG line plot");
}

void finish_config(const CLI::App& app, RunConfig& config) {
  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "timeseries") {
    config.command = Command::timeseries;
  } else if (name == "epe") {
    config.command = Command::epe;
  } else if (name == "scan") {
    config.command = Command::scan;
  } else if (name == "validate") {
    config.command = Command::validate;
  } else {
    config.command = Command::plot;
  }

  config.format = config.format_name == "json" ? Format::json : Format::csv;
  config.p_given = app.count("--p") > 0;
  config.kbar_given = app.count("--kbar") > 0;
  config.lbar_given = app.count("--lbar") > 0;
  config.delta_given = app.count("--delta") > 0;

  const bool single = config.command == Command::timeseries || config.command == Command::epe;
  if (single) {
    if (config.p.size() != 1 || config.kbar.size() != 1 || config.delta.size() != 1 ||
        config.lbar.size() > 1) {
      throw UsageError(name + " takes a single value for --p, --kbar, --lbar and --delta");
    }
  }
  if (config.command == Command::scan && !config.lbar.empty() &&
      config.lbar.size() != config.kbar.size()) {
    throw UsageError("--lbar must list as many values as --kbar");
  }
  if (config.command == Command::plot && config.input.empty()) {
    throw UsageError("plot needs --input");
  }
}

}  // namespace thermaljc::cli
