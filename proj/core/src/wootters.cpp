#include <algorithm>
#include <boost/multiprecision/float128.hpp>
#include <functional>
#include <limits>

#include "jacobi.hpp"
#include "thermaljc/errors.hpp"
#include "thermaljc/oracle.hpp"

namespace thermaljc {

namespace {

using Quad = boost::multiprecision::float128;
using Embedded = detail::SquareMatrix<Quad, 8>;

constexpr double kHermiticityTolerance = 1e-10;

/// Hermitian H = A + iB as the real symmetric [[A, -B], [B, A]]; its spectrum
/// is that of H with every eigenvalue doubled.
Embedded embed(const Eigen::Matrix4cd& h) {
  Embedded out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const Quad re = h(r, c).real();
      const Quad im = h(r, c).imag();
      const auto i = static_cast<std::size_t>(r);
      const auto j = static_cast<std::size_t>(c);
      out[i][j] = re;
      out[i + 4][j + 4] = re;
      out[i][j + 4] = -im;
      out[i + 4][j] = im;
    }
  }
  return out;
}

Embedded symmetric_sqrt(const Embedded& m) {
  const auto eig = detail::symmetric_eigen<Quad, 8>(m);
  Embedded out{};
  for (std::size_t k = 0; k < 8; ++k) {
    const Quad root = eig.values[k] > Quad(0) ? sqrt(eig.values[k]) : Quad(0);
    if (root == Quad(0)) continue;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        out[i][j] += eig.vectors[i][k] * root * eig.vectors[j][k];
  }
  return out;
}

}  // namespace

double wootters_concurrence_general(const Eigen::Matrix4cd& rho) {
  if (!rho.allFinite()) throw DomainError("density matrix has non-finite entries");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermiticityTolerance) {
    throw DomainError("density matrix is not hermitian");
  }

  // ρ̃ = (σy⊗σy) ρ* (σy⊗σy); σy⊗σy is real, so the product only reorders and
  // flips signs and is exact in double.
  Eigen::Matrix4d flip;
  flip << 0, 0, 0, -1,
          0, 0, 1, 0,
          0, 1, 0, 0,
          -1, 0, 0, 0;
  const Eigen::Matrix4cd hermitian = 0.5 * (rho + rho.adjoint());
  const Eigen::Matrix4cd flipped =
      flip.cast<std::complex<double>>() * hermitian.conjugate() * flip.cast<std::complex<double>>();

  // Eigenvalues of ρρ̃ equal those of the hermitian sqrt(ρ) ρ̃ sqrt(ρ).
  const Embedded root = symmetric_sqrt(embed(hermitian));
  const Embedded product =
      detail::multiply<Quad, 8>(detail::multiply<Quad, 8>(root, embed(flipped)), root);
  auto values = detail::symmetric_eigen<Quad, 8>(detail::symmetrized<Quad, 8>(product)).values;
  std::sort(values.begin(), values.end(), std::greater<>());

  std::array<Quad, 4> roots;
  for (std::size_t k = 0; k < 4; ++k) {
    const Quad v = values[2 * k];
    roots[k] = v > Quad(0) ? sqrt(v) : Quad(0);
  }
  const Quad c = roots[0] - roots[1] - roots[2] - roots[3];
  return c > Quad(0) ? static_cast<double>(c) : 0.0;
}

}  // namespace thermaljc
