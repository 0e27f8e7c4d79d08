#include "thermaljc/observables.hpp"

#include <algorithm>
#include <cmath>

namespace thermaljc {

double concurrence(const AtomicDensityMatrix& rho) {
  // Rounding can push a vanishing population a hair below zero.
  const double corner = std::sqrt(std::max(0.0, rho.x1 * rho.x6));
  return 2.0 * std::max(0.0, std::abs(rho.x3) - corner);
}

double purity(const AtomicDensityMatrix& rho) {
  return rho.x1 * rho.x1 + rho.x2 * rho.x2 + rho.x5 * rho.x5 +
         rho.x6 * rho.x6 + 2.0 * std::norm(rho.x3);
}

double energy(const AtomicDensityMatrix& rho) { return rho.x6 - rho.x1; }

EpePoint epe_point(const AtomicDensityMatrix& rho, double gt) {
  return {gt, concurrence(rho), purity(rho), energy(rho)};
}

}  // namespace thermaljc
