#include "thermaljc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thermaljc/errors.hpp"

namespace thermaljc {

EffectiveCoupling effective_coupling(const SystemParams& params, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("time must be finite and non-negative");
  }
  const double g = params.g();
  if (!params.motion_enabled()) return {g, g * t};

  // g' t = [1 - cos(pgt)] / p, written as 2 sin²(pgt/2) / p.
  const double p = params.p();
  const double half_angle = 0.5 * p * g * t;
  const double s = std::sin(half_angle);
  const double phase = 2.0 * s * s / p;
  return {t > 0.0 ? phase / t : 0.0, phase};
}

DressedParams dressed_params(double g_eff, double delta, int n) {
  if (n < 0) throw PreconditionError("sector index must be >= 0");

  const double coupling = std::abs(g_eff) * std::sqrt(static_cast<double>(n));
  DressedParams out;
  out.lambda = std::hypot(delta, 2.0 * coupling);

  if (n == 0 || coupling == 0.0) {
    if (delta == 0.0) {
      // Resonant limit: the mixing angle is pinned to -π/4 for n >= 1.
      out.sin2theta = n == 0 ? 0.0 : -1.0;
      out.cos2theta = n == 0 ? 1.0 : 0.0;
    } else {
      out.sin2theta = 0.0;
      out.cos2theta = delta > 0.0 ? 1.0 : -1.0;
    }
    return out;
  }

  // θ = -arctan(a / b), a = sqrt(Δ²/4 + G²) - Δ/2, b = G.
  const double half_lambda = 0.5 * out.lambda;
  const double a = delta > 0.0 ? coupling * coupling / (half_lambda + 0.5 * delta)
                               : half_lambda - 0.5 * delta;
  const double b = coupling;
  const double scale = std::max(a, b);
  const double as = a / scale;
  const double bs = b / scale;
  const double norm = as * as + bs * bs;
  out.sin2theta = -2.0 * as * bs / norm;
  out.cos2theta = (bs * bs - as * as) / norm;
  return out;
}

SumFactorCache::SumFactorCache(const ThermalDistribution& dist)
    : n_max_(dist.n_max()) {
  const auto size = static_cast<std::size_t>(n_max_) + 2;
  weights_.assign(dist.weights().begin(), dist.weights().end());
  transfer_.resize(size);
  retain_.resize(size);
  phase_.resize(size);
}

SumFactorCache::SumFactorCache(const ThermalDistribution& dist,
                               double coupling_phase, double detuning_phase)
    : SumFactorCache(dist) {
  for (std::size_t n = 0; n < transfer_.size(); ++n) {
    const auto d = dressed_params(coupling_phase, detuning_phase, static_cast<int>(n));
    const double half = 0.5 * d.lambda;
    const double s = std::sin(half);
    const double c = std::cos(half);
    transfer_[n] = s * s * d.sin2theta * d.sin2theta;
    retain_[n] = c * c + s * s * d.cos2theta * d.cos2theta;
    phase_[n] = {c, s * d.cos2theta};
  }
}

SumFactorCache SumFactorCache::resonant(const ThermalDistribution& dist,
                                        double coupling_phase) {
  SumFactorCache cache(dist);
  for (std::size_t n = 0; n < cache.transfer_.size(); ++n) {
    const double angle = coupling_phase * std::sqrt(static_cast<double>(n));
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    cache.transfer_[n] = s * s;
    cache.retain_[n] = c * c;
    cache.phase_[n] = {c, 0.0};
  }
  return cache;
}

SubsystemSums SumFactorCache::sums() const {
  SubsystemSums out;
  for (int n = n_max_; n >= 0; --n) {
    const auto i = static_cast<std::size_t>(n);
    const double w = weights_[i];
    out.stay_ground += w * retain_[i];
    out.stay_excited += w * retain_[i + 1];
    out.emission += w * transfer_[i + 1];
    if (n >= 1) out.absorption += w * transfer_[i];
    out.coherence += w * phase_[i] * phase_[i + 1];
  }
  return out;
}

AtomicDensityMatrix assemble_density_matrix(const SubsystemSums& a,
                                            const SubsystemSums& b) {
  AtomicDensityMatrix rho;
  rho.x1 = 0.5 * (a.emission * b.stay_ground + a.stay_ground * b.emission);
  rho.x2 = 0.5 * (a.stay_ground * b.stay_excited + a.emission * b.absorption);
  rho.x3 = 0.5 * a.coherence * std::conj(b.coherence);
  rho.x5 = 0.5 * (a.absorption * b.emission + a.stay_excited * b.stay_ground);
  rho.x6 = 0.5 * (a.stay_excited * b.absorption + a.absorption * b.stay_excited);
  return rho;
}

namespace {

void require_trace(const AtomicDensityMatrix& rho) {
  const double deviation = std::abs(rho.trace() - 1.0);
  if (!(deviation <= kStateTolerance)) {
    std::ostringstream msg;
    msg << "trace deviation " << deviation
        << " exceeds tolerance; increase the Fock truncation";
    throw TruncationError(msg.str());
  }
}

}  // namespace

AtomicDensityMatrix density_matrix(const SystemParams& params,
                                   const ThermalDistribution& dist_a,
                                   const ThermalDistribution& dist_b,
                                   double t) {
  const auto coupling = effective_coupling(params, t);
  const double detuning_phase = params.delta() * t;
  const SumFactorCache a(dist_a, coupling.phase, detuning_phase);
  const SumFactorCache b(dist_b, coupling.phase, detuning_phase);
  auto rho = assemble_density_matrix(a.sums(), b.sums());
  require_trace(rho);
  return rho;
}

AtomicDensityMatrix density_matrix_resonant(const SystemParams& params,
                                            const ThermalDistribution& dist_a,
                                            const ThermalDistribution& dist_b,
                                            double t) {
  if (params.delta() != 0.0) {
    throw PreconditionError("resonant path requires zero detuning");
  }
  const auto coupling = effective_coupling(params, t);
  const auto a = SumFactorCache::resonant(dist_a, coupling.phase);
  const auto b = SumFactorCache::resonant(dist_b, coupling.phase);
  auto rho = assemble_density_matrix(a.sums(), b.sums());
  require_trace(rho);
  return rho;
}

AtomicDensityMatrix evaluate(const SystemParams& params,
                             const ThermalDistribution& dist_a,
                             const ThermalDistribution& dist_b, double t) {
  return params.resonant() ? density_matrix_resonant(params, dist_a, dist_b, t)
                           : density_matrix(params, dist_a, dist_b, t);
}

}  // namespace thermaljc
