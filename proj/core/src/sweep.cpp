#include "thermaljc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "thermaljc/analytic.hpp"
#include "thermaljc/errors.hpp"

namespace thermaljc {

std::vector<EpePoint> TimeSeries::epe() const {
  std::vector<EpePoint> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.epe);
  return out;
}

std::string SweepConfig::label() const {
  std::ostringstream out;
  out << "p=" << params.p() << " kbar=" << field_a.mean_photons()
      << " lbar=" << field_b.mean_photons() << " delta=" << params.delta()
      << " g=" << params.g() << " motion=" << (params.motion_enabled() ? "on" : "off");
  return out.str();
}

std::vector<double> uniform_grid(double gt_max, int steps) {
  if (steps < 2) throw PreconditionError("need at least 2 steps");
  if (!(gt_max > 0.0) || !std::isfinite(gt_max)) {
    throw PreconditionError("gt_max must be positive and finite");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    grid[static_cast<std::size_t>(i)] = gt_max * i / steps;
  }
  return grid;
}

TimeSeries time_series(const SystemParams& params,
                       const ThermalDistribution& dist_a,
                       const ThermalDistribution& dist_b, double gt_max,
                       int steps) {
  TimeSeries series;
  const auto grid = uniform_grid(gt_max, steps);
  series.samples.reserve(grid.size());
  for (const double gt : grid) {
    const double t = gt / params.g();
    TimeSample sample;
    sample.gt = gt;
    sample.g_eff = effective_coupling(params, t).g_eff;
    sample.rho = evaluate(params, dist_a, dist_b, t);
    sample.epe = epe_point(sample.rho, gt);
    series.samples.push_back(sample);
  }
  return series;
}

std::vector<EpePoint> epe_trajectory(const SystemParams& params,
                                     const ThermalDistribution& dist_a,
                                     const ThermalDistribution& dist_b,
                                     double gt_max, int steps) {
  return time_series(params, dist_a, dist_b, gt_max, steps).epe();
}

std::vector<Interval> zero_concurrence_intervals(std::span<const EpePoint> points,
                                                 double threshold) {
  std::vector<Interval> out;
  std::size_t i = 0;
  while (i < points.size()) {
    if (points[i].concurrence >= threshold) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < points.size() && points[j + 1].concurrence < threshold) ++j;
    out.push_back({points[i].gt, points[j].gt});
    i = j + 1;
  }
  return out;
}

std::optional<double> expected_period(const SystemParams& params) {
  if (!params.resonant() || !params.motion_enabled()) return std::nullopt;
  return 2.0 * std::numbers::pi / params.p();
}

std::optional<double> revival_time(std::span<const EpePoint> points,
                                   double expected) {
  const double lo = 0.5 * expected;
  const double hi = 1.5 * expected;
  std::optional<double> best_time;
  double best = kRevivalTolerance;
  for (const auto& pt : points) {
    if (pt.gt <= lo || pt.gt > hi) continue;
    const double distance = std::abs(1.0 - pt.concurrence) +
                            std::abs(1.0 - pt.purity) + std::abs(pt.energy);
    if (distance <= best) {
      best = distance;
      best_time = pt.gt;
    }
  }
  return best_time;
}

std::optional<double> first_stable_time(std::span<const EpePoint> points,
                                        double threshold, double min_hold) {
  if (points.empty() || points.back().concurrence < threshold) return std::nullopt;
  std::size_t start = points.size() - 1;
  while (start > 0 && points[start - 1].concurrence >= threshold) --start;
  if (points.back().gt - points[start].gt < min_hold) return std::nullopt;
  return points[start].gt;
}

SweepReport summarize(const SweepConfig& config, const TimeSeries& series,
                      double zero_threshold) {
  if (series.samples.empty()) throw PreconditionError("empty time series");
  SweepReport report;
  report.label = config.label();

  const auto& first = series.samples.front().epe;
  report.concurrence = {first.concurrence, first.concurrence};
  report.purity = {first.purity, first.purity};
  report.energy = {first.energy, first.energy};
  auto widen = [](Range& r, double v) {
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  };
  for (const auto& s : series.samples) {
    widen(report.concurrence, s.epe.concurrence);
    widen(report.purity, s.epe.purity);
    widen(report.energy, s.epe.energy);
  }

  const auto points = series.epe();
  report.sudden_death = zero_concurrence_intervals(points, zero_threshold);
  report.expected_period = expected_period(config.params);
  if (report.expected_period) {
    report.period = revival_time(points, *report.expected_period);
  }
  return report;
}

std::vector<SweepReport> scan(std::span<const SweepConfig> configs,
                              double gt_max, int steps) {
  if (configs.empty()) throw PreconditionError("scan needs at least one configuration");
  std::vector<SweepReport> reports;
  reports.reserve(configs.size());
  for (const auto& config : configs) {
    const auto series =
        time_series(config.params, config.field_a, config.field_b, gt_max, steps);
    reports.push_back(summarize(config, series));
  }
  return reports;
}

}  // namespace thermaljc
