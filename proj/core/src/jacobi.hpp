#pragma once

#include <array>
#include <cstddef>
#include <limits>

namespace thermaljc::detail {

/// Real symmetric N x N matrix stored row-major.
template <typename Real, std::size_t N>
using SquareMatrix = std::array<std::array<Real, N>, N>;

template <typename Real, std::size_t N>
struct SymmetricEigen {
  std::array<Real, N> values;
  SquareMatrix<Real, N> vectors;  // columns are eigenvectors
};

template <typename Real, std::size_t N>
SquareMatrix<Real, N> multiply(const SquareMatrix<Real, N>& a,
                               const SquareMatrix<Real, N>& b) {
  SquareMatrix<Real, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (a[i][k] == Real(0)) continue;
      for (std::size_t j = 0; j < N; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

/// Cyclic Jacobi eigensolver. Accurate to working precision relative to the
/// matrix norm, which is what the quad-precision concurrence needs.
template <typename Real, std::size_t N>
SymmetricEigen<Real, N> symmetric_eigen(SquareMatrix<Real, N> a,
                                        int max_sweeps = 100) {
  using std::abs;
  using std::sqrt;
  SymmetricEigen<Real, N> out{};
  for (std::size_t i = 0; i < N; ++i) out.vectors[i][i] = Real(1);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Real off(0);
    Real scale(0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        if (i != j) off += a[i][j] * a[i][j];
        scale += a[i][j] * a[i][j];
      }
    if (off == Real(0) || off <= scale * std::numeric_limits<Real>::epsilon() *
                                      std::numeric_limits<Real>::epsilon()) {
      break;
    }

    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        if (a[p][q] == Real(0)) continue;
        const Real theta = (a[q][q] - a[p][p]) / (Real(2) * a[p][q]);
        const Real sign = theta < Real(0) ? Real(-1) : Real(1);
        const Real t = sign / (abs(theta) + sqrt(theta * theta + Real(1)));
        const Real c = Real(1) / sqrt(t * t + Real(1));
        const Real s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const Real akp = a[k][p];
          const Real akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const Real apk = a[p][k];
          const Real aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const Real vkp = out.vectors[k][p];
          const Real vkq = out.vectors[k][q];
          out.vectors[k][p] = c * vkp - s * vkq;
          out.vectors[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  for (std::size_t i = 0; i < N; ++i) out.values[i] = a[i][i];
  return out;
}

/// (a + aᵀ) / 2, removes rounding asymmetry before handing a product to Jacobi.
template <typename Real, std::size_t N>
SquareMatrix<Real, N> symmetrized(const SquareMatrix<Real, N>& a) {
  SquareMatrix<Real, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i][j] = (a[i][j] + a[j][i]) / Real(2);
  return out;
}

}  // namespace thermaljc::detail
