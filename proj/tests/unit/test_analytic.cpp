#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "double_sum_reference.hpp"
#include "thermaljc/analytic.hpp"
#include "thermaljc/errors.hpp"

namespace thermaljc {
namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const AtomicDensityMatrix& a, const AtomicDensityMatrix& b) {
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3),
                   std::abs(a.x5 - b.x5), std::abs(a.x6 - b.x6)});
}

TEST(EffectiveCoupling, ZeroAfterFullPeriod) {
  const auto params = SystemParams::with_detuning(0.0, 1);
  EXPECT_NEAR(effective_coupling(params, 2.0 * kPi).g_eff, 0.0, 1e-16);
}

TEST(EffectiveCoupling, HalfPeriodValue) {
  const auto params = SystemParams::with_detuning(0.0, 1);
  const auto c = effective_coupling(params, kPi);
  EXPECT_NEAR(c.g_eff, 2.0 / kPi, 1e-15);
  EXPECT_NEAR(c.phase, 2.0, 1e-15);
}

TEST(EffectiveCoupling, LimitAtZero) {
  const auto params = SystemParams::with_detuning(0.0, 3);
  const auto c = effective_coupling(params, 0.0);
  EXPECT_EQ(c.g_eff, 0.0);
  EXPECT_EQ(c.phase, 0.0);
}

TEST(EffectiveCoupling, PhaseBoundedByTwoOverP) {
  const auto params = SystemParams::with_detuning(0.0, 4);
  for (int i = 0; i <= 5000; ++i) {
    EXPECT_LE(effective_coupling(params, 0.005 * i).phase, 0.5 + 1e-15);
  }
}

TEST(EffectiveCoupling, MotionDisabledUsesBareCoupling) {
  const auto params = SystemParams::with_detuning(0.0, 1, 0.7, false);
  const auto c = effective_coupling(params, 3.0);
  EXPECT_EQ(c.g_eff, 0.7);
  EXPECT_NEAR(c.phase, 2.1, 1e-15);
}

TEST(EffectiveCoupling, NegativeTimeRejected) {
  EXPECT_THROW(effective_coupling(SystemParams::with_detuning(0.0, 1), -1e-3), DomainError);
}

TEST(DressedParams, ResonantSectorOne) {
  const auto d = dressed_params(1.0, 0.0, 1);
  EXPECT_NEAR(d.lambda, 2.0, 1e-15);
  EXPECT_NEAR(d.sin2theta, -1.0, 1e-15);
  EXPECT_NEAR(d.cos2theta, 0.0, 1e-15);
}

TEST(DressedParams, ResonantRabiFrequencyGrowsAsSqrtN) {
  EXPECT_NEAR(dressed_params(1.0, 0.0, 4).lambda, 4.0, 1e-15);
}

TEST(DressedParams, LargeDetuningAlmostUnmixed) {
  EXPECT_NEAR(dressed_params(0.1, 5.0, 1).cos2theta, 1.0, 0.01);
}

TEST(DressedParams, VacuumSectorConvention) {
  const auto d = dressed_params(0.3, 2.0, 0);
  EXPECT_EQ(d.lambda, 2.0);
  EXPECT_EQ(d.sin2theta, 0.0);
  EXPECT_EQ(d.cos2theta, 1.0);
}

TEST(DressedParams, MatchesArctanExpression) {
  for (const double delta : {-3.0, -0.2, 0.0, 0.1, 1.0, 5.0}) {
    for (const double g : {0.05, 0.4, 1.0}) {
      for (const int n : {1, 2, 7, 40}) {
        const auto d = dressed_params(g, delta, n);
        const auto r = reference::sector(g, delta, n);
        EXPECT_NEAR(d.sin2theta, r.sin2, 1e-13);
        EXPECT_NEAR(d.cos2theta, r.cos2, 1e-13);
        EXPECT_NEAR(d.lambda, std::sqrt(delta * delta + 4 * g * g * n), 1e-13);
        EXPECT_NEAR(d.sin2theta * d.sin2theta + d.cos2theta * d.cos2theta, 1.0, 1e-14);
      }
    }
  }
}

TEST(SumFactorCache, FactorsPartitionUnity) {
  const ThermalDistribution dist(0.5);
  for (const double gt : {0.3, 1.7, 4.0, 11.0}) {
    const SumFactorCache cache(dist, 0.8 * gt, 1.3 * gt);
    for (std::size_t n = 0; n < cache.transfer().size(); ++n) {
      const double tr = cache.transfer()[n];
      const double re = cache.retain()[n];
      EXPECT_GE(tr, 0.0);
      EXPECT_LE(tr, 1.0);
      EXPECT_GE(re, 0.0);
      EXPECT_LE(re, 1.0 + 1e-15);
      EXPECT_NEAR(tr + re, 1.0, 1e-14);
    }
  }
}

TEST(SumFactorCache, ResonantMatchesGeneralAtZeroDetuning) {
  const ThermalDistribution dist(0.5);
  const auto fast = SumFactorCache::resonant(dist, 1.1);
  const SumFactorCache slow(dist, 1.1, 0.0);
  for (std::size_t n = 1; n < fast.transfer().size(); ++n) {
    EXPECT_NEAR(fast.transfer()[n], slow.transfer()[n], 1e-13);
    EXPECT_NEAR(std::abs(fast.phase()[n] - slow.phase()[n]), 0.0, 1e-13);
  }
}

TEST(DensityMatrix, InitialBellState) {
  const auto params = SystemParams::with_detuning(1.0, 2);
  const ThermalDistribution a(0.5);
  const auto rho = density_matrix(params, a, a, 0.0);
  EXPECT_NEAR(rho.x2, 0.5, 1e-11);
  EXPECT_NEAR(rho.x5, 0.5, 1e-11);
  EXPECT_NEAR(std::abs(rho.x3 - 0.5), 0.0, 1e-11);
  EXPECT_EQ(rho.x1, 0.0);
  EXPECT_EQ(rho.x6, 0.0);
}

TEST(DensityMatrix, VacuumClosedForm) {
  const auto params = SystemParams::with_detuning(0.0, 1);
  const auto vac = ThermalDistribution::vacuum();
  for (int i = 0; i <= 200; ++i) {
    const double t = 0.125 * i;
    const double phase = 1.0 - std::cos(t);
    const double s2 = std::sin(phase) * std::sin(phase);
    const double c2 = std::cos(phase) * std::cos(phase);
    for (const auto& rho : {density_matrix(params, vac, vac, t),
                            density_matrix_resonant(params, vac, vac, t)}) {
      EXPECT_NEAR(rho.x1, s2, 1e-14);
      EXPECT_NEAR(rho.x2, 0.5 * c2, 1e-14);
      EXPECT_NEAR(rho.x5, 0.5 * c2, 1e-14);
      EXPECT_NEAR(std::abs(rho.x3 - 0.5 * c2), 0.0, 1e-14);
      EXPECT_NEAR(rho.x6, 0.0, 1e-300);
    }
  }
}

TEST(DensityMatrix, LargeDetuningFreezesPopulations) {
  const auto params = SystemParams::with_detuning(5.0, 1);
  const ThermalDistribution a(0.1);
  const auto rho = density_matrix(params, a, a, 24.0);
  EXPECT_LT(rho.x1, 0.01);
  EXPECT_LT(rho.x6, 0.01);
  EXPECT_NEAR(rho.x2, 0.5, 0.01);
  EXPECT_NEAR(rho.x5, 0.5, 0.01);
  EXPECT_NEAR(std::abs(rho.x3), 0.5, 0.01);
}

TEST(DensityMatrix, FactorisedEqualsDoubleSum) {
  for (const double k : {0.0, 0.1, 0.5, 1.5}) {
    for (const double l : {0.0, 0.3, 2.0}) {
      const ThermalDistribution a(k, 1e-4);
      const ThermalDistribution b(l, 1e-4);
      ASSERT_LE(a.n_max(), 24);
      for (const double delta : {-2.0, 0.0, 0.7, 5.0}) {
        for (const double gt : {0.0, 0.9, 3.3, 7.1}) {
          const double cp = 0.6 * gt;
          const double dp = delta * gt;
          const SumFactorCache ca(a, cp, dp);
          const SumFactorCache cb(b, cp, dp);
          const auto fast = assemble_density_matrix(ca.sums(), cb.sums());
          const auto slow = reference::double_sum_state(a, b, cp, dp);
          EXPECT_LE(max_diff(fast, slow), 1e-12)
              << "k=" << k << " l=" << l << " delta=" << delta << " gt=" << gt;
        }
      }
    }
  }
}

TEST(DensityMatrix, ResonantPathAgreesWithGeneral) {
  const ThermalDistribution a(0.1);
  for (const int p : {1, 4}) {
    const auto params = SystemParams::with_detuning(0.0, p);
    for (const double t : {0.0, 0.4, 1.0, 2.5, 9.0, 24.0}) {
      EXPECT_LE(max_diff(density_matrix(params, a, a, t),
                         density_matrix_resonant(params, a, a, t)),
                1e-12);
    }
  }
}

TEST(DensityMatrix, ResonantPathRejectsDetuning) {
  const auto params = SystemParams::with_detuning(0.5, 1);
  const auto vac = ThermalDistribution::vacuum();
  EXPECT_THROW(density_matrix_resonant(params, vac, vac, 1.0), PreconditionError);
}

TEST(DensityMatrix, PeriodicInScaledTime) {
  const ThermalDistribution a(0.5);
  for (const int p : {1, 2, 4}) {
    const auto params = SystemParams::with_detuning(0.0, p);
    const double period = 2.0 * kPi / p;
    for (const double t : {0.3, 1.1, 2.9}) {
      EXPECT_LE(max_diff(evaluate(params, a, a, t), evaluate(params, a, a, t + period)), 1e-10);
    }
  }
}

TEST(DensityMatrix, TraceAndPositivityAcrossGrid) {
  for (const int p : {1, 4}) {
    for (const double k : {0.0, 0.1, 0.5, 5.0}) {
      const ThermalDistribution a(k);
      for (const double delta : {0.0, 0.1, 1.0, 5.0}) {
        const auto params = SystemParams::with_detuning(delta, p);
        for (int i = 0; i <= 100; ++i) {
          const auto rho = evaluate(params, a, a, 0.25 * i);
          EXPECT_NEAR(rho.trace(), 1.0, 1e-9);
          EXPECT_GE(rho.inner_block_min_eigenvalue(), -1e-9);
          EXPECT_GE(rho.x1, -1e-9);
          EXPECT_GE(rho.x6, -1e-9);
          EXPECT_NEAR(rho.x2, rho.x5, 1e-10);
        }
      }
    }
  }
}

TEST(DensityMatrix, AsymmetricFieldsSwapRoles) {
  const ThermalDistribution a(0.1);
  const ThermalDistribution b(2.0);
  const auto params = SystemParams::with_detuning(0.4, 1);
  const auto ab = density_matrix(params, a, b, 1.7);
  const auto ba = density_matrix(params, b, a, 1.7);
  EXPECT_NEAR(ab.x1, ba.x1, 1e-13);
  EXPECT_NEAR(ab.x6, ba.x6, 1e-13);
  EXPECT_NEAR(ab.x2, ba.x5, 1e-13);
  EXPECT_NEAR(std::abs(ab.x3 - std::conj(ba.x3)), 0.0, 1e-13);
}

TEST(DensityMatrix, CoarseTruncationIsReported) {
  const auto params = SystemParams::with_detuning(0.0, 1);
  const ThermalDistribution a(5.0, 1e-2);
  EXPECT_THROW(density_matrix(params, a, a, 1.0), TruncationError);
}

TEST(DensityMatrix, NegativeTimeRejected) {
  const auto params = SystemParams::with_detuning(0.0, 1);
  const auto vac = ThermalDistribution::vacuum();
  EXPECT_THROW(evaluate(params, vac, vac, -1.0), DomainError);
}

}  // namespace
}  // namespace thermaljc
