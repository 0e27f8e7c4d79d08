#include "thermaljc/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "thermaljc/errors.hpp"

namespace thermaljc {

SystemParams::SystemParams(double g, double omega_c, double omega_0,
                           double delta, int p, bool motion_enabled)
    : g_(g),
      omega_c_(omega_c),
      omega_0_(omega_0),
      delta_(delta),
      p_(p),
      motion_enabled_(motion_enabled) {
  if (!(g_ > 0.0) || !std::isfinite(g_)) {
    throw PreconditionError("coupling g must be positive and finite");
  }
  if (p_ < 1) {
    throw PreconditionError("mode structure parameter p must be >= 1");
  }
  if (!std::isfinite(omega_c_) || !std::isfinite(omega_0_) ||
      !std::isfinite(delta_)) {
    throw PreconditionError("frequencies must be finite");
  }
}

SystemParams SystemParams::with_detuning(double delta, int p, double g,
                                         bool motion_enabled, double omega_c) {
  return SystemParams(g, omega_c, omega_c + delta, delta, p, motion_enabled);
}

SystemParams SystemParams::from_frequencies(double omega_c, double omega_0,
                                            int p, double g,
                                            bool motion_enabled) {
  return SystemParams(g, omega_c, omega_0, omega_0 - omega_c, p,
                      motion_enabled);
}

int truncation_index(double mean, double epsilon) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw PreconditionError("mean photon number must be finite and >= 0");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw PreconditionError("tail epsilon must lie in (0, 1)");
  }
  if (mean == 0.0) return 0;

  const double ratio = mean / (mean + 1.0);
  const double log_ratio = std::log(ratio);
  double guess = std::ceil(std::log(epsilon) / log_ratio) - 1.0;
  if (guess > static_cast<double>(std::numeric_limits<int>::max() - 2)) {
    throw PreconditionError("truncation index does not fit the Fock cutoff");
  }
  int n = std::max(0, static_cast<int>(guess));
  // The logarithm quotient can land one off at the boundary; settle it with
  // the tail itself.
  auto tail = [&](int k) { return std::pow(ratio, k + 1); };
  while (n > 0 && tail(n - 1) <= epsilon) --n;
  while (tail(n) > epsilon) ++n;
  return n;
}

ThermalDistribution::ThermalDistribution(double mean_photons,
                                         double epsilon_tail)
    : mean_(mean_photons),
      epsilon_(epsilon_tail),
      n_max_(truncation_index(mean_photons, epsilon_tail)) {
  weights_.resize(static_cast<std::size_t>(n_max_) + 1);
  for (int n = 0; n <= n_max_; ++n) {
    weights_[static_cast<std::size_t>(n)] = probability(n);
  }
}

double ThermalDistribution::probability(int n) const {
  if (n < -1) throw PreconditionError("photon index must be >= -1");
  if (n == -1) return 0.0;
  if (mean_ == 0.0) return n == 0 ? 1.0 : 0.0;
  const double ratio = mean_ / (mean_ + 1.0);
  return std::pow(ratio, n) / (mean_ + 1.0);
}

double ThermalDistribution::tail_mass() const {
  if (mean_ == 0.0) return 0.0;
  return std::pow(mean_ / (mean_ + 1.0), n_max_ + 1);
}

double thermal_probability(const ThermalDistribution& dist, int n) {
  return dist.probability(n);
}

double mean_photons_from_temperature(double omega_c, double temperature) {
  if (!(temperature > 0.0)) {
    throw DomainError("temperature must be positive");
  }
  if (!(omega_c > 0.0)) {
    throw DomainError("cavity frequency must be positive");
  }
  return 1.0 / std::expm1(omega_c / temperature);
}

double AtomicDensityMatrix::inner_block_min_eigenvalue() const {
  const double mid = 0.5 * (x2 + x5);
  const double half_gap = 0.5 * (x2 - x5);
  return mid - std::hypot(half_gap, std::abs(x3));
}

std::vector<std::string> AtomicDensityMatrix::violations(double tolerance) const {
  std::vector<std::string> out;
  auto report = [&](const std::string& what, double value) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " (" << value << ")";
    out.push_back(msg.str());
  };

  const double values[] = {x1, x2, x5, x6};
  const char* names[] = {"x1", "x2", "x5", "x6"};
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(values[i])) report(std::string(names[i]) + " not finite", values[i]);
    if (values[i] < -tolerance || values[i] > 1.0 + tolerance) {
      report(std::string(names[i]) + " outside [0, 1]", values[i]);
    }
  }
  if (!std::isfinite(x3.real()) || !std::isfinite(x3.imag())) {
    report("x3 not finite", std::abs(x3));
  }
  const double deviation = std::abs(trace() - 1.0);
  if (!(deviation <= tolerance)) report("trace deviation", deviation);
  const double lowest = inner_block_min_eigenvalue();
  if (!(lowest >= -tolerance)) report("inner block not positive", lowest);
  return out;
}

AtomicDensityMatrix AtomicDensityMatrix::checked(double x1, double x2,
                                                 std::complex<double> x3,
                                                 double x5, double x6,
                                                 double tolerance) {
  AtomicDensityMatrix rho{x1, x2, x3, x5, x6};
  const auto problems = rho.violations(tolerance);
  if (!problems.empty()) {
    std::string msg = "invalid atomic density matrix:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw ConsistencyError(msg);
  }
  return rho;
}

AtomicDensityMatrix AtomicDensityMatrix::bell_state() {
  return AtomicDensityMatrix{0.0, 0.5, {0.5, 0.0}, 0.5, 0.0};
}

}  // namespace thermaljc
