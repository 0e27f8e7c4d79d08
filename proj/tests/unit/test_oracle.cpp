#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "thermaljc/analytic.hpp"
#include "thermaljc/errors.hpp"
#include "thermaljc/observables.hpp"
#include "thermaljc/oracle.hpp"

namespace thermaljc {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double max_abs(const Eigen::Matrix4cd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(EvolveSector, IdentityAtZeroTime) {
  const SectorAmplitudes in{{0.6, 0.1}, {0.0, -0.79}};
  const auto out = evolve_sector(0.8, 1.3, 3, 0.0, in);
  EXPECT_NEAR(std::abs(out.excited - in.excited), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out.ground - in.ground), 0.0, 1e-15);
}

TEST(EvolveSector, VacuumRabiOscillation) {
  for (const double t : {0.1, 0.7, 2.0}) {
    const auto out = evolve_sector(1.0, 0.0, 0, t, {1.0, 0.0});
    EXPECT_NEAR(std::abs(out.excited - cd(std::cos(t), 0.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(out.ground - cd(0.0, -std::sin(t))), 0.0, 1e-14);
  }
}

TEST(EvolveSector, Unitary) {
  const SectorAmplitudes in{{0.6, 0.0}, {0.0, 0.8}};
  for (const double delta : {-4.0, 0.0, 0.3, 5.0}) {
    for (const int n : {0, 1, 10, 100}) {
      for (const double t : {0.5, 3.0, 25.0}) {
        const auto out = evolve_sector(0.7, delta, n, t, in);
        EXPECT_NEAR(std::norm(out.excited) + std::norm(out.ground), 1.0, 1e-14);
      }
    }
  }
}

TEST(EvolveSector, LargeDetuningKeepsExcitation) {
  for (int i = 0; i <= 2000; ++i) {
    const auto out = evolve_sector(0.1, 5.0, 0, 0.05 * i, {1.0, 0.0});
    EXPECT_GE(std::norm(out.excited), 0.998);
  }
}

TEST(EvolveSector, VacuumGroundPhase) {
  const auto a = evolve_vacuum_ground(0.8, 2.0, 1.0);
  EXPECT_NEAR(std::abs(a - std::exp(cd(0.0, 0.8))), 0.0, 1e-15);
}

TEST(SubsystemState, EvolutionPreservesNorm) {
  auto s = SubsystemState(6);
  s(Level::excited, 0) = 0.5;
  s(Level::ground, 3) = cd(0.0, 0.5);
  s(Level::excited, 4) = cd(0.5, 0.5);
  const auto out = s.evolved(1.3, 0.4);
  EXPECT_NEAR(out.norm(), s.norm(), 1e-14);
}

TEST(SubsystemState, TopExcitedLevelRejected) {
  const auto s = SubsystemState::basis(Level::excited, 3, 4);
  EXPECT_THROW(s.evolved(0.5, 0.0), PreconditionError);
}

TEST(EvolveBranch, ProductInputAtZeroTime) {
  const auto params = SystemParams::with_detuning(0.0, 1);
  const ProductTerm term{1.0, Level::excited, 0, Level::ground, 0};
  const auto rho = evolve_branch(params, std::span(&term, 1), 0.0, 2, 2);
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(2, 2) = 1.0;
  EXPECT_LE(max_abs(rho.matrix() - expected), 1e-15);
}

TEST(EvolveBranch, VacuumHalfRabiEmptiesAtoms) {
  // Motion off so that g' t = g t exactly; g t = π/2 emits both excitations
  // of |e,0; e,0>.
  const auto params = SystemParams::with_detuning(0.0, 1, 1.0, false);
  const ProductTerm term{1.0, Level::excited, 0, Level::excited, 0};
  const auto rho = evolve_branch(params, std::span(&term, 1), kPi / 2, 2, 2);
  EXPECT_NEAR(rho.matrix()(0, 0).real(), 1.0, 1e-14);
}

TEST(EvolveBranch, CoherenceNeedsMatchingPhotonNumbers) {
  // |e,1;g,0> + |g,0;e,0>: the two terms leave field A in different Fock
  // states at t = 0, so the atomic coherence traces out to zero.
  const auto params = SystemParams::with_detuning(0.0, 1);
  const std::array<ProductTerm, 2> terms{
      ProductTerm{1.0 / std::sqrt(2.0), Level::excited, 1, Level::ground, 0},
      ProductTerm{1.0 / std::sqrt(2.0), Level::ground, 0, Level::excited, 0}};
  const auto rho = evolve_branch(params, terms, 0.0, 3, 3);
  EXPECT_NEAR(std::abs(rho.matrix()(1, 2)), 0.0, 1e-15);
  EXPECT_NEAR(rho.matrix()(1, 1).real(), 0.5, 1e-15);
}

TEST(OracleDensity, InitialStateIsBell) {
  const auto params = SystemParams::with_detuning(1.0, 1);
  const ThermalDistribution a(0.5);
  const auto rho = oracle_joint_density(params, a, a, 0.0);
  const auto bell = JointDensity::from_atomic(AtomicDensityMatrix::bell_state());
  EXPECT_LE(max_abs(rho.matrix() - bell.matrix()), 1e-11);
}

TEST(OracleDensity, MatchesAnalyticOnMixedSettings) {
  struct Case {
    double delta;
    int p;
    double k;
    double l;
    bool motion;
  };
  const Case cases[] = {{0.0, 1, 0.1, 0.1, true},  {-1.5, 1, 0.3, 0.3, true},
                        {2.0, 3, 0.2, 1.0, true},  {0.7, 1, 0.5, 0.0, false},
                        {-5.0, 4, 0.1, 0.1, true}, {0.0, 2, 1.0, 0.4, false}};
  for (const auto& c : cases) {
    const auto params = SystemParams::with_detuning(c.delta, c.p, 1.0, c.motion);
    const ThermalDistribution a(c.k);
    const ThermalDistribution b(c.l);
    for (const double t : {0.0, 0.5, 1.0, 3.7, 12.0}) {
      const auto oracle = oracle_joint_density(params, a, b, t);
      const auto analytic = JointDensity::from_atomic(evaluate(params, a, b, t));
      EXPECT_LE(max_abs(oracle.matrix() - analytic.matrix()), 1e-9)
          << "delta=" << c.delta << " p=" << c.p << " t=" << t;
      EXPECT_LE(oracle.max_off_x(), 1e-12);
      EXPECT_LE(oracle.hermiticity_error(), 1e-12);
      EXPECT_GE(oracle.min_eigenvalue(), -1e-9);
    }
  }
}

TEST(OracleDensity, VacuumClosedForm) {
  const auto params = SystemParams::with_detuning(0.0, 1);
  const auto vac = ThermalDistribution::vacuum();
  for (const double t : {0.3, 1.0, 2.2, 5.0}) {
    const double phase = 1.0 - std::cos(t);
    const auto rho = oracle_density_matrix(params, vac, vac, t);
    EXPECT_NEAR(rho.x1, std::pow(std::sin(phase), 2), 1e-12);
    EXPECT_NEAR(std::abs(rho.x3 - 0.5 * std::pow(std::cos(phase), 2)), 0.0, 1e-12);
    EXPECT_NEAR(rho.x6, 0.0, 1e-12);
  }
}

TEST(OracleDensity, CoarseTruncationReported) {
  const auto params = SystemParams::with_detuning(0.0, 1);
  const ThermalDistribution a(5.0, 1e-2);
  EXPECT_THROW(oracle_joint_density(params, a, a, 1.0), TruncationError);
}

TEST(Wootters, BellAndMaximallyMixed) {
  const auto bell = JointDensity::from_atomic(AtomicDensityMatrix::bell_state());
  EXPECT_NEAR(wootters_concurrence_general(bell.matrix()), 1.0, 1e-14);
  EXPECT_NEAR(wootters_concurrence_general(Eigen::Matrix4cd::Identity() / 4.0), 0.0, 1e-15);
}

TEST(Wootters, WernerFamily) {
  Eigen::Vector4cd psi(0.0, 1.0, 1.0, 0.0);
  psi /= std::sqrt(2.0);
  for (const double w : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const Eigen::Matrix4cd rho =
        w * psi * psi.adjoint() + (1.0 - w) * Eigen::Matrix4cd::Identity() / 4.0;
    EXPECT_NEAR(wootters_concurrence_general(rho), std::max(0.0, (3.0 * w - 1.0) / 2.0), 1e-12)
        << w;
  }
}

TEST(Wootters, GenericPureStates) {
  const std::array<Eigen::Vector4cd, 3> states = {
      Eigen::Vector4cd(cd(0.3, 0.1), cd(-0.5, 0.2), cd(0.1, 0.6), cd(0.4, -0.2)),
      Eigen::Vector4cd(cd(1.0, 0.0), cd(0.0, 0.0), cd(0.0, 0.0), cd(0.2, 0.3)),
      Eigen::Vector4cd(cd(0.5, 0.0), cd(0.5, 0.0), cd(0.5, 0.0), cd(0.5, 0.0))};
  for (auto psi : states) {
    psi.normalize();
    const cd a = psi(0), b = psi(1), c = psi(2), d = psi(3);
    const Eigen::Matrix4cd rho = psi * psi.adjoint();
    EXPECT_NEAR(wootters_concurrence_general(rho), 2.0 * std::abs(a * d - b * c), 1e-12);
  }
}

TEST(Wootters, RejectsNonHermitian) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity() / 4.0;
  m(0, 3) = 0.1;
  EXPECT_THROW(wootters_concurrence_general(m), DomainError);
}

TEST(Wootters, AgreesWithXStateShortcut) {
  for (const double k : {0.0, 0.1, 0.5}) {
    const ThermalDistribution a(k);
    for (const double delta : {0.0, 1.0, 5.0}) {
      const auto params = SystemParams::with_detuning(delta, 1);
      for (int i = 0; i <= 50; ++i) {
        const auto rho = evaluate(params, a, a, 0.5 * i);
        EXPECT_NEAR(wootters_concurrence_general(JointDensity::from_atomic(rho).matrix()),
                    concurrence(rho), 1e-10);
      }
    }
  }
}

}  // namespace
}  // namespace thermaljc
