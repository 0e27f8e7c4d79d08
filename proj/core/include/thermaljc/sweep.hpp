#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thermaljc/model.hpp"
#include "thermaljc/observables.hpp"

namespace thermaljc {

/// C below this counts as zero when looking for sudden-death episodes.
inline constexpr double kSuddenDeathThreshold = 1e-6;

/// Largest |1-C| + |1-P| + |U| accepted as a return to the initial Bell state.
inline constexpr double kRevivalTolerance = 1e-3;

struct TimeSample {
  double gt = 0.0;
  double g_eff = 0.0;
  AtomicDensityMatrix rho;
  EpePoint epe;
};

struct TimeSeries {
  std::vector<TimeSample> samples;

  std::vector<EpePoint> epe() const;
};

struct Interval {
  double begin = 0.0;
  double end = 0.0;
  double length() const { return end - begin; }
};

struct Range {
  double min = 0.0;
  double max = 0.0;
  double amplitude() const { return max - min; }
};

/// One parameter point of a scan.
struct SweepConfig {
  SystemParams params;
  ThermalDistribution field_a;
  ThermalDistribution field_b;

  std::string label() const;
};

struct SweepReport {
  std::string label;
  Range concurrence;
  Range purity;
  Range energy;
  std::vector<Interval> sudden_death;
  /// Analytic period 2π/p of the resonant motion-modulated dynamics, if any.
  std::optional<double> expected_period;
  /// Revival time found in the series near expected_period.
  std::optional<double> period;
};

/// gt_i = gt_max * i / steps, i = 0 .. steps.
std::vector<double> uniform_grid(double gt_max, int steps);

/// Closed-form evaluation on the uniform grid; resonant fast path when Δ = 0.
TimeSeries time_series(const SystemParams& params,
                       const ThermalDistribution& dist_a,
                       const ThermalDistribution& dist_b, double gt_max,
                       int steps);

std::vector<EpePoint> epe_trajectory(const SystemParams& params,
                                     const ThermalDistribution& dist_a,
                                     const ThermalDistribution& dist_b,
                                     double gt_max, int steps);

/// Maximal runs of samples with C < threshold, as [first gt, last gt].
std::vector<Interval> zero_concurrence_intervals(std::span<const EpePoint> points,
                                                 double threshold = kSuddenDeathThreshold);

/// Period of the resonant dynamics with atomic motion, 2π/p in gt; empty when
/// the dynamics is not periodic (detuned, or motion disabled).
std::optional<double> expected_period(const SystemParams& params);

/// Time of closest return to (C, P, U) = (1, 1, 0) within (T/2, 3T/2] of the
/// expected period T. Empty if no sample comes within kRevivalTolerance.
std::optional<double> revival_time(std::span<const EpePoint> points,
                                   double expected);

/// Earliest sample time after which C >= threshold for the rest of the
/// series, provided that stretch lasts at least min_hold.
std::optional<double> first_stable_time(std::span<const EpePoint> points,
                                        double threshold, double min_hold);

SweepReport summarize(const SweepConfig& config, const TimeSeries& series,
                      double zero_threshold = kSuddenDeathThreshold);

/// Summaries in input order. Throws PreconditionError for an empty list.
std::vector<SweepReport> scan(std::span<const SweepConfig> configs,
                              double gt_max, int steps);

}  // namespace thermaljc
