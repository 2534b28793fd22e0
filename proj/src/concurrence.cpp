// SPDX-License-Identifier: MIT
#include "qtangle/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qtangle/eig.hpp"

namespace qtangle {

namespace {

// sigma_y (x) sigma_y (real matrix: antidiagonal -1, 1, 1, -1)
const ComplexMatrix& yy() {
  static const ComplexMatrix m{{0.0, 0.0, 0.0, -1.0},
                               {0.0, 0.0, 1.0, 0.0},
                               {0.0, 1.0, 0.0, 0.0},
                               {-1.0, 0.0, 0.0, 0.0}};
  return m;
}

// Eigenvalues of rho below this weight are treated as exact zeros. Keeping
// such modes would inject sqrt(round-off) ~ 1e-8 into the result; dropping
// them changes it by at most ~sqrt(threshold).
constexpr double kWeightFloor = 1e-12;

}  // namespace

double concurrence_pure(const StateVector& psi) {
  if (psi.num_qubits() != 2) throw std::invalid_argument("concurrence requires two qubits");
  // |<psi|sigma_y (x) sigma_y|psi*>| = 2 |a0 a3 - a1 a2|
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

double concurrence(const DensityMatrix& rho) {
  if (rho.subsystem_dims() != std::vector<int>{2, 2})
    throw std::invalid_argument("concurrence requires a two-qubit density matrix");

  // Spectral form rho = sum_i |phi_i><phi_i| with subnormalized columns
  // phi_i = sqrt(w_i) v_i. The four Wootters values are the singular values
  // of the complex symmetric matrix tau_ij = phi_i^T (sigma_y(x)sigma_y)
  // phi_j: the nonzero spectrum of rho * rho_tilde equals that of
  // tau^* tau, so sqrt-eigenvalues of the product become plain singular
  // values here and no precision is lost on rank-deficient input.
  const SpectralDecomposition d = hermitian_eig(rho.matrix());
  std::vector<ComplexMatrix> cols;  // 4x1 subnormalized eigenvectors
  for (size_t j = 0; j < d.eigenvalues.size(); ++j) {
    if (d.eigenvalues[j] <= kWeightFloor) continue;
    const double scale = std::sqrt(d.eigenvalues[j]);
    ComplexMatrix col(4, 1);
    for (int r = 0; r < 4; ++r) col(r, 0) = scale * d.eigenvectors(r, static_cast<int>(j));
    cols.push_back(std::move(col));
  }

  const int k = static_cast<int>(cols.size());
  ComplexMatrix tau(k, k);
  for (int i = 0; i < k; ++i) {
    const ComplexMatrix yi = yy() * cols[i];
    for (int j = 0; j < k; ++j) {
      cd acc = 0.0;
      for (int r = 0; r < 4; ++r) acc += cols[j](r, 0) * yi(r, 0);  // transpose, no conjugate
      tau(i, j) = acc;
    }
  }

  // Singular values via the Hermitian embedding [[0, tau], [tau^dagger, 0]],
  // whose spectrum is {+sigma_i, -sigma_i}.
  ComplexMatrix embed(2 * k, 2 * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      embed(r, k + c) = tau(r, c);
      embed(k + r, c) = std::conj(tau(c, r));
    }
  const SpectralDecomposition e = hermitian_eig(embed);

  double lambda[4] = {0.0, 0.0, 0.0, 0.0};  // descending, zero-padded
  for (int i = 0; i < k && i < 4; ++i) lambda[i] = std::max(0.0, e.eigenvalues[i]);
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

}  // namespace qtangle
