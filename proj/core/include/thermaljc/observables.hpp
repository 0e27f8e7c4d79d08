#pragma once

#include "thermaljc/model.hpp"

namespace thermaljc {

/// One sample of the entanglement-purity-energy trajectory.
struct EpePoint {
  double gt = 0.0;
  double concurrence = 0.0;
  double purity = 0.0;
  double energy = 0.0;
};

/// X-state concurrence 2 max{0, |x3| - sqrt(x1 x6)}.
double concurrence(const AtomicDensityMatrix& rho);

/// Tr(ρ²) = x1² + x2² + x5² + x6² + 2|x3|².
double purity(const AtomicDensityMatrix& rho);

/// <S_z^A + S_z^B> with ω₀ = 1, i.e. x6 - x1.
double energy(const AtomicDensityMatrix& rho);

EpePoint epe_point(const AtomicDensityMatrix& rho, double gt);

}  // namespace thermaljc
