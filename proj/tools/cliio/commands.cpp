#include "cliio/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "cliio/svg_plot.hpp"
#include "thermaljc/thermaljc.hpp"

#ifndef THERMALJC_VERSION
#define THERMALJC_VERSION "unknown"
#endif

namespace thermaljc::cli {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

SystemParams params_at(const RunConfig& c, int p, double delta) {
  return SystemParams::with_detuning(delta, p, c.g, c.motion);
}

std::vector<SweepConfig> product(const RunConfig& c, const std::vector<int>& ps,
                                 const std::vector<double>& ks,
                                 const std::vector<double>& ls,
                                 const std::vector<double>& deltas) {
  std::vector<SweepConfig> configs;
  for (const int p : ps) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (const double delta : deltas) {
        configs.push_back({params_at(c, p, delta), ThermalDistribution(ks[i], c.epsilon_tail),
                           ThermalDistribution(ls[i], c.epsilon_tail)});
      }
    }
  }
  return configs;
}

TimeSeries single_series(const RunConfig& c) {
  const auto params = params_at(c, c.p.front(), c.delta.front());
  const ThermalDistribution a(c.kbar.front(), c.epsilon_tail);
  const ThermalDistribution b(c.effective_lbar().front(), c.epsilon_tail);
  return time_series(params, a, b, c.gt_max, c.steps);
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t seconds = std::chrono::system_clock::to_time_t(now);
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

nlohmann::ordered_json metadata(const RunConfig& c, const char* command) {
  nlohmann::ordered_json m;
  m["program"] = "thermaljc";
  m["version"] = THERMALJC_VERSION;
  m["command"] = command;
  if (c.command == Command::timeseries || c.command == Command::epe) {
    m["p"] = c.p.front();
    m["kbar"] = c.kbar.front();
    m["lbar"] = c.effective_lbar().front();
    m["delta"] = c.delta.front();
  } else {
    m["p"] = c.p;
    m["kbar"] = c.kbar;
    m["lbar"] = c.effective_lbar();
    m["delta"] = c.delta;
  }
  m["g"] = c.g;
  m["motion"] = c.motion;
  m["gt_max"] = c.gt_max;
  m["steps"] = c.steps;
  m["epsilon_tail"] = c.epsilon_tail;
  if (c.command == Command::timeseries || c.command == Command::epe) {
    m["n_max_a"] = ThermalDistribution(c.kbar.front(), c.epsilon_tail).n_max();
    m["n_max_b"] = ThermalDistribution(c.effective_lbar().front(), c.epsilon_tail).n_max();
  }
  if (c.timestamp) m["generated_at"] = timestamp_now();
  return m;
}

std::string render_table(const RunConfig& c, const Table& table, const char* command) {
  std::ostringstream out;
  if (c.format == Format::json) {
    write_json(out, table, metadata(c, command));
  } else {
    write_csv(out, table);
  }
  return out.str();
}

void emit(const RunConfig& c, const std::string& content, std::ostream& out) {
  if (c.output.empty() || c.output == "-") {
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + c.output + "' for writing");
  file << content;
  file.close();
  if (!file) throw IoError("failed writing '" + c.output + "'");
}

Table read_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  try {
    return json ? read_json(file) : read_csv(file);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string plot_svg(const RunConfig& c) {
  const Table table = read_input(c.input);
  std::vector<std::string> names = c.columns;
  if (names.empty()) {
    for (const char* preferred : {"concurrence", "purity", "energy"}) {
      if (std::find(table.columns.begin(), table.columns.end(), preferred) !=
          table.columns.end()) {
        names.emplace_back(preferred);
      }
    }
    if (names.empty()) {
      for (const auto& name : table.columns) {
        if (name != c.x_column) names.push_back(name);
      }
    }
  }
  const auto require = [&table](const std::string& name) {
    if (std::find(table.columns.begin(), table.columns.end(), name) == table.columns.end()) {
      throw UsageError("input has no column '" + name + "'");
    }
  };
  require(c.x_column);
  for (const auto& name : names) require(name);
  const auto x = table.column(c.x_column);
  std::vector<Series> series;
  for (const auto& name : names) series.push_back({name, x, table.column(name)});
  PlotOptions options;
  options.title = c.title;
  options.x_label = c.x_column;
  for (std::size_t i = 0; i < names.size(); ++i) {
    options.y_label += (i ? ", " : "") + names[i];
  }
  return render_line_plot(series, options);
}

std::string validation_report(const std::vector<ValidationRow>& rows) {
  std::ostringstream out;
  out << std::setprecision(3);
  double worst = 0.0;
  std::size_t failed = 0;
  for (const auto& row : rows) {
    out << (row.passed ? "ok   " : "FAIL ") << row.label;
    if (row.error.empty()) {
      out << "  max_deviation=" << std::scientific << row.max_deviation << std::defaultfloat;
      worst = std::max(worst, row.max_deviation);
    } else {
      out << "  error: " << row.error;
    }
    out << '\n';
    if (!row.passed) ++failed;
  }
  out << rows.size() << " configurations, " << failed << " failed, max deviation "
      << std::scientific << worst << " (tolerance " << kValidateTolerance << ")\n";
  return out.str();
}

}  // namespace

Table timeseries_table(const RunConfig& config) {
  const auto series = single_series(config);
  Table table{kTimeseriesColumns, {}};
  table.rows.reserve(series.samples.size());
  for (const auto& s : series.samples) {
    table.rows.push_back({s.gt, s.g_eff, s.rho.x1, s.rho.x2, s.rho.x3.real(), s.rho.x3.imag(),
                          s.rho.x5, s.rho.x6, s.epe.concurrence, s.epe.purity,
                          s.epe.energy});
  }
  return table;
}

Table epe_table(const RunConfig& config) {
  const auto series = single_series(config);
  Table table{kEpeColumns, {}};
  table.rows.reserve(series.samples.size());
  for (const auto& s : series.samples) {
    table.rows.push_back({s.gt, s.epe.concurrence, s.epe.purity, s.epe.energy});
  }
  return table;
}

Table scan_table(const RunConfig& config) {
  const auto configs =
      product(config, config.p, config.kbar, config.effective_lbar(), config.delta);
  const auto reports = scan(configs, config.gt_max, config.steps);
  Table table{kScanColumns, {}};
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& c = configs[i];
    const auto& r = reports[i];
    double span = 0.0;
    for (const auto& interval : r.sudden_death) span += interval.length();
    table.rows.push_back({static_cast<double>(c.params.p()), c.field_a.mean_photons(),
                          c.field_b.mean_photons(), c.params.delta(), r.concurrence.min,
                          r.concurrence.max, r.purity.min, r.purity.max, r.energy.min,
                          r.energy.max, static_cast<double>(r.sudden_death.size()), span,
                          r.expected_period.value_or(kNaN), r.period.value_or(kNaN)});
  }
  return table;
}

std::vector<ValidationRow> validate_grid(const RunConfig& config) {
  const std::vector<int> ps = config.p_given ? config.p : std::vector<int>{1, 4};
  const std::vector<double> ks =
      config.kbar_given ? config.kbar : std::vector<double>{0.0, 0.1, 0.5};
  const std::vector<double> ls = config.lbar_given ? config.lbar : ks;
  if (ls.size() != ks.size()) throw UsageError("--lbar must list as many values as --kbar");
  const std::vector<double> deltas =
      config.delta_given ? config.delta : std::vector<double>{0.0, 1.0, 5.0};

  const auto times = config.validate_times == 1
                         ? std::vector<double>{0.0}
                         : uniform_grid(config.gt_max, config.validate_times - 1);

  std::vector<ValidationRow> rows;
  for (const auto& sc : product(config, ps, ks, ls, deltas)) {
    ValidationRow row;
    row.label = sc.label();
    try {
      for (const double gt : times) {
        const double t = gt / sc.params.g();
        const auto analytic =
            JointDensity::from_atomic(evaluate(sc.params, sc.field_a, sc.field_b, t));
        const auto oracle = oracle_joint_density(sc.params, sc.field_a, sc.field_b, t);
        const double dev = (analytic.matrix() - oracle.matrix()).cwiseAbs().maxCoeff();
        row.max_deviation = std::max(row.max_deviation, dev);
        if (!std::isfinite(dev)) row.max_deviation = std::numeric_limits<double>::infinity();
      }
      row.passed = row.max_deviation <= kValidateTolerance;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.passed = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int execute(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::timeseries:
      emit(config, render_table(config, timeseries_table(config), "timeseries"), out);
      return kExitOk;
    case Command::epe:
      emit(config, render_table(config, epe_table(config), "epe"), out);
      return kExitOk;
    case Command::scan:
      emit(config, render_table(config, scan_table(config), "scan"), out);
      return kExitOk;
    case Command::validate: {
      const auto rows = validate_grid(config);
      emit(config, validation_report(rows), out);
      const bool ok = std::all_of(rows.begin(), rows.end(),
                                  [](const ValidationRow& r) { return r.passed; });
      return ok ? kExitOk : kExitValidation;
    }
    case Command::plot:
      emit(config, plot_svg(config), out);
      return kExitOk;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"", "thermaljc"};
  RunConfig config;
  configure_app(app, config);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    finish_config(app, config);
  } catch (const CLI::FileError& e) {
    err << "thermaljc: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "thermaljc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return execute(config, out);
  } catch (const UsageError& e) {
    err << "thermaljc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "thermaljc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "thermaljc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "thermaljc: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "thermaljc: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConsistencyError& e) {
    err << "thermaljc: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace thermaljc::cli
