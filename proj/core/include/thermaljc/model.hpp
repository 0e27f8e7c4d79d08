#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace thermaljc {

/// Tail tolerance used when none is given: probability mass allowed beyond n_max.
inline constexpr double kDefaultTailEpsilon = 1e-12;

/// Tolerance on trace deviation and positivity of reduced states.
inline constexpr double kStateTolerance = 1e-9;

/// Physical constants of one (identical) atom-cavity pair.
///
/// Frequencies share the unit of g; times handed to the dynamics are physical
/// times t, while everything user-facing is expressed as the scaled time gt.
/// The atomic velocity is fixed to v = gL/pi, so neither v nor L is stored:
/// the mode shape integral only depends on gt and p.
class SystemParams {
 public:
  /// Detuning-first constructor (omega_0 = omega_c + delta).
  static SystemParams with_detuning(double delta, int p, double g = 1.0,
                                    bool motion_enabled = true,
                                    double omega_c = 1.0);

  /// Frequency-first constructor; delta = omega_0 - omega_c exactly.
  static SystemParams from_frequencies(double omega_c, double omega_0, int p,
                                       double g = 1.0,
                                       bool motion_enabled = true);

  double g() const { return g_; }
  double omega_c() const { return omega_c_; }
  double omega_0() const { return omega_0_; }
  double delta() const { return delta_; }
  int p() const { return p_; }
  bool motion_enabled() const { return motion_enabled_; }
  bool resonant() const { return delta_ == 0.0; }

 private:
  SystemParams(double g, double omega_c, double omega_0, double delta, int p,
               bool motion_enabled);

  double g_;
  double omega_c_;
  double omega_0_;
  double delta_;
  int p_;
  bool motion_enabled_;
};

/// Geometric photon-number distribution of a thermal mode, truncated at the
/// smallest n_max whose tail mass is below epsilon_tail.
class ThermalDistribution {
 public:
  explicit ThermalDistribution(double mean_photons,
                               double epsilon_tail = kDefaultTailEpsilon);

  static ThermalDistribution vacuum() { return ThermalDistribution(0.0); }

  double mean_photons() const { return mean_; }
  double epsilon_tail() const { return epsilon_; }
  int n_max() const { return n_max_; }

  /// Untruncated P_n = mean^n / (mean+1)^(n+1); P_{-1} = 0.
  double probability(int n) const;

  /// Truncated ensemble weight: P_n for 0 <= n <= n_max, zero otherwise.
  double weight(int n) const {
    return (n < 0 || n > n_max_) ? 0.0 : weights_[static_cast<std::size_t>(n)];
  }

  /// Weights P_0 .. P_{n_max}.
  std::span<const double> weights() const { return weights_; }

  /// Exact mass beyond n_max: (mean/(mean+1))^(n_max+1).
  double tail_mass() const;

 private:
  double mean_;
  double epsilon_;
  int n_max_;
  std::vector<double> weights_;
};

/// P_n of the thermal distribution; n >= -1.
double thermal_probability(const ThermalDistribution& dist, int n);

/// Smallest N with (mean/(mean+1))^(N+1) <= epsilon; 0 for the vacuum.
int truncation_index(double mean, double epsilon);

/// Bose occupation 1 / (exp(omega_c / T) - 1).
double mean_photons_from_temperature(double omega_c, double temperature);

/// Reduced two-atom state in the basis |gg>, |ge>, |eg>, |ee> (first letter is
/// atom A). Only the X-shaped entries can be nonzero:
///
///   [ x1  0   0   0  ]
///   [ 0   x2  x3  0  ]
///   [ 0   x4  x5  0  ]     x4 = conj(x3)
///   [ 0   0   0   x6 ]
struct AtomicDensityMatrix {
  double x1 = 0.0;
  double x2 = 0.0;
  std::complex<double> x3{};
  double x5 = 0.0;
  double x6 = 0.0;

  std::complex<double> x4() const { return std::conj(x3); }
  double trace() const { return x1 + x2 + x5 + x6; }

  /// Smaller eigenvalue of the inner block [[x2, x3], [x4, x5]].
  double inner_block_min_eigenvalue() const;

  /// Human-readable list of violated invariants (empty when valid).
  std::vector<std::string> violations(double tolerance = kStateTolerance) const;
  bool valid(double tolerance = kStateTolerance) const {
    return violations(tolerance).empty();
  }

  /// Builds a matrix and throws ConsistencyError if it violates invariants.
  static AtomicDensityMatrix checked(double x1, double x2,
                                     std::complex<double> x3, double x5,
                                     double x6,
                                     double tolerance = kStateTolerance);

  /// (|eg> + |ge>)/sqrt(2).
  static AtomicDensityMatrix bell_state();
};

/// Dressed-state quantities of the excitation sector labelled by n.
struct DressedParams {
  double lambda = 0.0;     ///< sqrt(delta^2 + 4 g'^2 n)
  double sin2theta = 0.0;  ///< sin(2 theta_n)
  double cos2theta = 1.0;  ///< cos(2 theta_n)
};

/// Instantaneous coupling g' and the accumulated phase g' t.
struct EffectiveCoupling {
  double g_eff = 0.0;
  double phase = 0.0;  ///< g' t, dimensionless
};

}  // namespace thermaljc
