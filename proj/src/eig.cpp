// SPDX-License-Identifier: MIT
#include "qtangle/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qtangle {

namespace {

constexpr double kOffDiagonalTarget = 1e-13;  // Frobenius norm of off-diagonal part
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

int SpectralDecomposition::rank(double tol) const {
  return static_cast<int>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double l) { return l > tol; }));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  int n = eigenvectors.rows();
  ComplexMatrix out(n, n);
  for (size_t j = 0; j < eigenvalues.size(); ++j)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out(r, c) += eigenvalues[j] * eigenvectors(r, static_cast<int>(j)) *
                     std::conj(eigenvectors(c, static_cast<int>(j)));
  return out;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& h) {
  if (!h.is_square() || !h.is_hermitian(1e-10))
    throw std::invalid_argument("hermitian required");
  const int n = h.rows();

  // Work on the exactly Hermitian average to keep rotations stable.
  ComplexMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > kOffDiagonalTarget; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cd beta = a(p, q);
        const double abs_beta = std::abs(beta);
        if (abs_beta < 1e-300) continue;
        const double alpha = std::real(a(p, p));
        const double gamma = std::real(a(q, q));
        const double phi = std::arg(beta);
        const double theta = 0.5 * std::atan2(2.0 * abs_beta, alpha - gamma);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const cd em = std::polar(1.0, -phi);  // e^{-i phi}
        const cd ep = std::polar(1.0, phi);

        // Columns: B = A * U with U = [[c, -s], [s e^{-i phi}, c e^{-i phi}]]
        for (int k = 0; k < n; ++k) {
          const cd akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * c + akq * (s * em);
          a(k, q) = akp * (-s) + akq * (c * em);
        }
        // Rows: A' = U^dagger * B
        for (int k = 0; k < n; ++k) {
          const cd apk = a(p, k), aqk = a(q, k);
          a(p, k) = apk * c + aqk * (s * ep);
          a(q, k) = apk * (-s) + aqk * (c * ep);
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cd(std::real(a(p, p)), 0.0);
        a(q, q) = cd(std::real(a(q, q)), 0.0);
        for (int k = 0; k < n; ++k) {
          const cd vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c + vkq * (s * em);
          v(k, q) = vkp * (-s) + vkq * (c * em);
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return std::real(a(i, i)) > std::real(a(j, j));
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    out.eigenvalues[j] = std::real(a(src, src));
    // Canonical phase: rotate the column so its largest component is real
    // and positive (ties broken by the lowest row index).
    int kmax = 0;
    double best = -1.0;
    for (int k = 0; k < n; ++k) {
      const double m = std::abs(v(k, src));
      if (m > best + 1e-15) {
        best = m;
        kmax = k;
      }
    }
    cd phase(1.0, 0.0);
    if (best > 0.0) phase = std::conj(v(kmax, src)) / std::abs(v(kmax, src));
    for (int k = 0; k < n; ++k) out.eigenvectors(k, j) = v(k, src) * phase;
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("trace norm requires a square matrix");
  SpectralDecomposition d = hermitian_eig(m);
  double s = 0.0;
  for (double l : d.eigenvalues) s += std::abs(l);
  return s;
}

}  // namespace qtangle
