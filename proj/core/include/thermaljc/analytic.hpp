#pragma once

#include <complex>
#include <span>
#include <vector>

#include "thermaljc/model.hpp"

namespace thermaljc {

/// g' for the moving atom, g'(t) = [1 - cos(pgt)] / (p t), or g when motion is
/// disabled. Throws DomainError for t < 0.
EffectiveCoupling effective_coupling(const SystemParams& params, double t);

/// Rabi frequency and mixing angle of sector n.
///
/// The result is homogeneous in (g_eff, delta): passing the phases (g' t, Δ t)
/// yields lambda_n * t with the same angles, which is how the solvers use it.
/// n = 0 is the one-dimensional |g,0> sector: lambda = |Δ|, sin2θ = 0 and
/// cos2θ = sign(Δ) so that cos(λt/2) + i sin(λt/2) cos2θ = exp(iΔt/2).
DressedParams dressed_params(double g_eff, double delta, int n);

/// Thermal averages of one atom-cavity pair that the reduced state factorises
/// into. Every double sum over (n, m) in the reduced density matrix is a
/// product of one of these for cavity a and one for cavity b.
struct SubsystemSums {
  double stay_ground = 0.0;    ///< Σ P_n [cos² + sin² cos²2θ]_n
  double stay_excited = 0.0;   ///< Σ P_n [cos² + sin² cos²2θ]_{n+1}
  double emission = 0.0;       ///< Σ P_{n-1} [sin² sin²2θ]_n
  double absorption = 0.0;     ///< Σ P_{n+1} [sin² sin²2θ]_{n+1}
  std::complex<double> coherence{};  ///< Σ P_n c_n c_{n+1}, c = cos + i sin cos2θ
};

/// Per-index factors of one subsystem at a fixed time, n = 0 .. n_max + 1.
class SumFactorCache {
 public:
  /// General detuning. coupling_phase = g' t, detuning_phase = Δ t.
  SumFactorCache(const ThermalDistribution& dist, double coupling_phase,
                 double detuning_phase);

  /// Δ = 0 specialisation: λ_n t/2 = g' t sqrt(n), sin2θ = -1, cos2θ = 0.
  static SumFactorCache resonant(const ThermalDistribution& dist,
                                 double coupling_phase);

  int n_max() const { return n_max_; }
  std::span<const double> weights() const { return weights_; }
  /// sin²(λ_n t/2) sin²(2θ_n)
  std::span<const double> transfer() const { return transfer_; }
  /// cos²(λ_n t/2) + sin²(λ_n t/2) cos²(2θ_n)
  std::span<const double> retain() const { return retain_; }
  /// cos(λ_n t/2) + i sin(λ_n t/2) cos(2θ_n)
  std::span<const std::complex<double>> phase() const { return phase_; }

  /// Thermal sums, accumulated from n_max down to 0.
  SubsystemSums sums() const;

 private:
  explicit SumFactorCache(const ThermalDistribution& dist);

  int n_max_;
  std::vector<double> weights_;
  std::vector<double> transfer_;
  std::vector<double> retain_;
  std::vector<std::complex<double>> phase_;
};

/// Combines the two subsystems' sums into x1..x6.
AtomicDensityMatrix assemble_density_matrix(const SubsystemSums& a,
                                            const SubsystemSums& b);

/// Closed-form reduced state of the two atoms at physical time t, any detuning.
/// Throws TruncationError if the trace deviates from 1 by more than
/// kStateTolerance.
AtomicDensityMatrix density_matrix(const SystemParams& params,
                                   const ThermalDistribution& dist_a,
                                   const ThermalDistribution& dist_b,
                                   double t);

/// Resonant fast path; requires params.delta() == 0.
AtomicDensityMatrix density_matrix_resonant(const SystemParams& params,
                                            const ThermalDistribution& dist_a,
                                            const ThermalDistribution& dist_b,
                                            double t);

/// Picks the resonant path when Δ = 0.
AtomicDensityMatrix evaluate(const SystemParams& params,
                             const ThermalDistribution& dist_a,
                             const ThermalDistribution& dist_b, double t);

}  // namespace thermaljc
