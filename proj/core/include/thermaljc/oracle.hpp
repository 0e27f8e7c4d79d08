#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <span>
#include <vector>

#include "thermaljc/model.hpp"

namespace thermaljc {

// Brute-force reference for the closed-form solution. Each atom-cavity pair is
// propagated in a truncated Fock space by exact diagonalisation of its 2x2
// excitation sectors, the two-atom state is assembled branch by branch and the
// fields are traced out explicitly. Only the frozen coupling g'(t) is taken
// from analytic.hpp; the propagators and the trace are computed independently.

enum class Level { ground = 0, excited = 1 };

/// Amplitudes of the sector {|e,n>, |g,n+1>}.
struct SectorAmplitudes {
  std::complex<double> excited;  ///< on |e, n>
  std::complex<double> ground;   ///< on |g, n+1>
};

/// Propagates one excitation sector for time t with the coupling frozen at
/// g_eff: H = (Δ/2)σ_z + g_eff sqrt(n+1) σ_x, global energy offset dropped.
SectorAmplitudes evolve_sector(double g_eff, double delta, int n, double t,
                               SectorAmplitudes in);

/// The |g,0> sector only picks up the phase exp(iΔt/2).
std::complex<double> evolve_vacuum_ground(double delta, double t,
                                          std::complex<double> amplitude);

/// Pure state of one atom and its cavity mode, photon numbers 0 .. field_levels-1.
class SubsystemState {
 public:
  explicit SubsystemState(int field_levels);
  static SubsystemState basis(Level level, int photons, int field_levels);

  int field_levels() const { return field_levels_; }
  std::complex<double>& operator()(Level level, int photons);
  std::complex<double> operator()(Level level, int photons) const;
  std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }
  double norm() const;

  /// State after evolution with accumulated phases g' t and Δ t. Throws
  /// PreconditionError if amplitude sits on the top excited level, whose
  /// sector partner lies outside the truncated space.
  SubsystemState evolved(double coupling_phase, double detuning_phase) const;

 private:
  int field_levels_;
  std::vector<std::complex<double>> amplitudes_;  // index 2n + level
};

/// One term c |atom_a, photons_a; atom_b, photons_b> of a pure branch.
struct ProductTerm {
  std::complex<double> amplitude;
  Level atom_a;
  int photons_a;
  Level atom_b;
  int photons_b;
};

/// (|e,n; g,m> + |g,n; e,m>) / sqrt(2), one branch of the initial mixture.
std::array<ProductTerm, 2> bell_branch(int n, int m);

/// Two-atom density matrix over |gg>, |ge>, |eg>, |ee> (index 2a + b).
class JointDensity {
 public:
  JointDensity() : matrix_(Eigen::Matrix4cd::Zero()) {}
  explicit JointDensity(const Eigen::Matrix4cd& matrix) : matrix_(matrix) {}
  static JointDensity from_atomic(const AtomicDensityMatrix& rho);

  const Eigen::Matrix4cd& matrix() const { return matrix_; }
  JointDensity& operator+=(const JointDensity& other);

  std::complex<double> trace() const { return matrix_.trace(); }
  double hermiticity_error() const;
  /// Lowest eigenvalue of the hermitian part.
  double min_eigenvalue() const;
  /// Largest magnitude among entries outside the diagonal and the |ge><eg| pair.
  double max_off_x() const;
  AtomicDensityMatrix to_atomic() const;

 private:
  Eigen::Matrix4cd matrix_;
};

/// Evolves one pure branch of atoms+fields under U_1 ⊗ U_2 (frozen g'(t)) and
/// returns weight * Tr_fields |ψ(t)><ψ(t)|.
JointDensity evolve_branch(const SystemParams& params,
                           std::span<const ProductTerm> branch, double t,
                           int field_levels_a, int field_levels_b,
                           double weight = 1.0);

/// Σ_{n,m} P_n P_m of the evolved Bell branches over the truncated ensembles.
/// Throws TruncationError on a trace deficit beyond kStateTolerance.
JointDensity oracle_joint_density(const SystemParams& params,
                                  const ThermalDistribution& dist_a,
                                  const ThermalDistribution& dist_b, double t);

/// X-state view of oracle_joint_density. Throws ConsistencyError if entries
/// outside the X pattern exceed 1e-12.
AtomicDensityMatrix oracle_density_matrix(const SystemParams& params,
                                          const ThermalDistribution& dist_a,
                                          const ThermalDistribution& dist_b,
                                          double t);

/// Wootters concurrence from the spectrum of ρ (σy⊗σy) ρ* (σy⊗σy), for any
/// two-qubit density matrix. Evaluated in quad precision. Throws DomainError
/// for non-hermitian input.
double wootters_concurrence_general(const Eigen::Matrix4cd& rho);

}  // namespace thermaljc
