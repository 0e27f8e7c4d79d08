#include "thermaljc/oracle.hpp"

#include <cmath>
#include <sstream>

#include "thermaljc/analytic.hpp"
#include "thermaljc/errors.hpp"

namespace thermaljc {

namespace {

constexpr double kOffXTolerance = 1e-12;

/// exp(-i H) for the dimensionless sector Hamiltonian H = [[d/2, c], [c, -d/2]].
Eigen::Matrix2cd sector_propagator(double coupling, double detuning) {
  Eigen::Matrix2d h;
  h << 0.5 * detuning, coupling, coupling, -0.5 * detuning;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(h);
  const Eigen::Matrix2cd vectors = solver.eigenvectors().cast<std::complex<double>>();
  Eigen::Vector2cd phases;
  for (int k = 0; k < 2; ++k) {
    phases(k) = std::polar(1.0, -solver.eigenvalues()(k));
  }
  return vectors * phases.asDiagonal() * vectors.adjoint();
}

int index_of(Level level, int photons) {
  return 2 * photons + static_cast<int>(level);
}

/// G(α, α') = Σ_i u(α, i) conj(v(α', i)), the field trace of |u><v|.
Eigen::Matrix2cd field_trace(const SubsystemState& u, const SubsystemState& v) {
  Eigen::Matrix2cd gram = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < u.field_levels(); ++i) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        gram(a, b) += u(static_cast<Level>(a), i) *
                      std::conj(v(static_cast<Level>(b), i));
      }
    }
  }
  return gram;
}

/// Σ_{k,l} c_k conj(c_l) G_A(k,l) ⊗ G_B(k,l).
JointDensity trace_out_fields(std::span<const std::complex<double>> coefficients,
                              std::span<const SubsystemState> states_a,
                              std::span<const SubsystemState> states_b,
                              double weight) {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const std::size_t terms = coefficients.size();
  for (std::size_t k = 0; k < terms; ++k) {
    for (std::size_t l = 0; l < terms; ++l) {
      const auto ga = field_trace(states_a[k], states_a[l]);
      const auto gb = field_trace(states_b[k], states_b[l]);
      const std::complex<double> c = weight * coefficients[k] * std::conj(coefficients[l]);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int ap = 0; ap < 2; ++ap)
            for (int bp = 0; bp < 2; ++bp)
              rho(2 * a + b, 2 * ap + bp) += c * ga(a, ap) * gb(b, bp);
    }
  }
  return JointDensity(rho);
}

/// Accumulated phases (g' t, Δ t) of the frozen-coupling evolution.
std::pair<double, double> phases(const SystemParams& params, double t) {
  const auto coupling = effective_coupling(params, t);
  return {coupling.phase, params.delta() * t};
}

}  // namespace

SectorAmplitudes evolve_sector(double g_eff, double delta, int n, double t,
                               SectorAmplitudes in) {
  if (n < 0) throw PreconditionError("sector index must be >= 0");
  const double coupling = g_eff * t * std::sqrt(static_cast<double>(n + 1));
  const auto u = sector_propagator(coupling, delta * t);
  return {u(0, 0) * in.excited + u(0, 1) * in.ground,
          u(1, 0) * in.excited + u(1, 1) * in.ground};
}

std::complex<double> evolve_vacuum_ground(double delta, double t,
                                          std::complex<double> amplitude) {
  return std::polar(1.0, 0.5 * delta * t) * amplitude;
}

SubsystemState::SubsystemState(int field_levels)
    : field_levels_(field_levels),
      amplitudes_(static_cast<std::size_t>(2 * field_levels)) {
  if (field_levels < 1) throw PreconditionError("need at least one field level");
}

SubsystemState SubsystemState::basis(Level level, int photons, int field_levels) {
  if (photons < 0 || photons >= field_levels) {
    throw PreconditionError("photon number outside the truncated space");
  }
  SubsystemState state(field_levels);
  state(level, photons) = 1.0;
  return state;
}

std::complex<double>& SubsystemState::operator()(Level level, int photons) {
  return amplitudes_[static_cast<std::size_t>(index_of(level, photons))];
}

std::complex<double> SubsystemState::operator()(Level level, int photons) const {
  return amplitudes_[static_cast<std::size_t>(index_of(level, photons))];
}

double SubsystemState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

SubsystemState SubsystemState::evolved(double coupling_phase,
                                       double detuning_phase) const {
  const int top = field_levels_ - 1;
  if ((*this)(Level::excited, top) != std::complex<double>{}) {
    throw PreconditionError("amplitude on |e, n_top>: field space too small");
  }
  SubsystemState out(field_levels_);
  out(Level::ground, 0) = std::polar(1.0, 0.5 * detuning_phase) * (*this)(Level::ground, 0);
  for (int n = 0; n < top; ++n) {
    const double coupling = coupling_phase * std::sqrt(static_cast<double>(n + 1));
    const auto u = sector_propagator(coupling, detuning_phase);
    const auto e = (*this)(Level::excited, n);
    const auto g = (*this)(Level::ground, n + 1);
    out(Level::excited, n) = u(0, 0) * e + u(0, 1) * g;
    out(Level::ground, n + 1) = u(1, 0) * e + u(1, 1) * g;
  }
  return out;
}

std::array<ProductTerm, 2> bell_branch(int n, int m) {
  const std::complex<double> c{1.0 / std::sqrt(2.0), 0.0};
  return {ProductTerm{c, Level::excited, n, Level::ground, m},
          ProductTerm{c, Level::ground, n, Level::excited, m}};
}

JointDensity JointDensity::from_atomic(const AtomicDensityMatrix& rho) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = rho.x1;
  m(1, 1) = rho.x2;
  m(1, 2) = rho.x3;
  m(2, 1) = rho.x4();
  m(2, 2) = rho.x5;
  m(3, 3) = rho.x6;
  return JointDensity(m);
}

JointDensity& JointDensity::operator+=(const JointDensity& other) {
  matrix_ += other.matrix_;
  return *this;
}

double JointDensity::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double JointDensity::min_eigenvalue() const {
  const Eigen::Matrix4cd hermitian = 0.5 * (matrix_ + matrix_.adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(
      hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double JointDensity::max_off_x() const {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const bool diagonal = r == c;
      const bool inner = (r == 1 && c == 2) || (r == 2 && c == 1);
      if (!diagonal && !inner) worst = std::max(worst, std::abs(matrix_(r, c)));
    }
  }
  return worst;
}

AtomicDensityMatrix JointDensity::to_atomic() const {
  return AtomicDensityMatrix{matrix_(0, 0).real(), matrix_(1, 1).real(),
                             matrix_(1, 2), matrix_(2, 2).real(),
                             matrix_(3, 3).real()};
}

JointDensity evolve_branch(const SystemParams& params,
                           std::span<const ProductTerm> branch, double t,
                           int field_levels_a, int field_levels_b,
                           double weight) {
  const auto [coupling_phase, detuning_phase] = phases(params, t);
  std::vector<std::complex<double>> coefficients;
  std::vector<SubsystemState> states_a;
  std::vector<SubsystemState> states_b;
  for (const auto& term : branch) {
    coefficients.push_back(term.amplitude);
    states_a.push_back(SubsystemState::basis(term.atom_a, term.photons_a, field_levels_a)
                           .evolved(coupling_phase, detuning_phase));
    states_b.push_back(SubsystemState::basis(term.atom_b, term.photons_b, field_levels_b)
                           .evolved(coupling_phase, detuning_phase));
  }
  return trace_out_fields(coefficients, states_a, states_b, weight);
}

JointDensity oracle_joint_density(const SystemParams& params,
                                  const ThermalDistribution& dist_a,
                                  const ThermalDistribution& dist_b, double t) {
  const auto [coupling_phase, detuning_phase] = phases(params, t);
  // One extra photon above n_max: |e, n_max> couples to |g, n_max + 1>.
  const int levels_a = dist_a.n_max() + 2;
  const int levels_b = dist_b.n_max() + 2;

  auto evolve_all = [&](const ThermalDistribution& dist, int levels, Level level) {
    std::vector<SubsystemState> states;
    for (int n = 0; n <= dist.n_max(); ++n) {
      states.push_back(SubsystemState::basis(level, n, levels)
                           .evolved(coupling_phase, detuning_phase));
    }
    return states;
  };
  const auto a_excited = evolve_all(dist_a, levels_a, Level::excited);
  const auto a_ground = evolve_all(dist_a, levels_a, Level::ground);
  const auto b_excited = evolve_all(dist_b, levels_b, Level::excited);
  const auto b_ground = evolve_all(dist_b, levels_b, Level::ground);

  JointDensity total;
  for (int n = 0; n <= dist_a.n_max(); ++n) {
    for (int m = 0; m <= dist_b.n_max(); ++m) {
      const auto branch = bell_branch(n, m);
      const std::array<std::complex<double>, 2> coefficients{branch[0].amplitude,
                                                             branch[1].amplitude};
      const auto un = static_cast<std::size_t>(n);
      const auto um = static_cast<std::size_t>(m);
      const std::array<SubsystemState, 2> states_a{a_excited[un], a_ground[un]};
      const std::array<SubsystemState, 2> states_b{b_ground[um], b_excited[um]};
      total += trace_out_fields(coefficients, states_a, states_b,
                                dist_a.weight(n) * dist_b.weight(m));
    }
  }

  const double deficit = std::abs(total.trace() - 1.0);
  if (!(deficit <= kStateTolerance)) {
    std::ostringstream msg;
    msg << "oracle trace deficit " << deficit << " exceeds tolerance";
    throw TruncationError(msg.str());
  }
  return total;
}

AtomicDensityMatrix oracle_density_matrix(const SystemParams& params,
                                          const ThermalDistribution& dist_a,
                                          const ThermalDistribution& dist_b,
                                          double t) {
  const auto joint = oracle_joint_density(params, dist_a, dist_b, t);
  const double off = joint.max_off_x();
  if (off > kOffXTolerance) {
    std::ostringstream msg;
    msg << "oracle state leaves the X pattern: off-X entry " << off;
    throw ConsistencyError(msg.str());
  }
  return joint.to_atomic();
}

}  // namespace thermaljc
