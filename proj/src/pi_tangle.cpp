// SPDX-License-Identifier: MIT
#include "qtangle/pi_tangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qtangle/concurrence.hpp"
#include "qtangle/eig.hpp"
#include "qtangle/rank2.hpp"
#include "qtangle/three_tangle.hpp"

namespace qtangle {

namespace {

constexpr double kReportClamp = -1e-10;  // values in [-1e-10, 0) are round-off

double clamp_report(double v) { return (v < 0.0 && v >= kReportClamp) ? 0.0 : v; }

void require_three_qubits(const DensityMatrix& rho) {
  if (rho.subsystem_dims() != std::vector<int>{2, 2, 2})
    throw std::invalid_argument("three-qubit density matrix required");
}

struct Negativities {
  double a, b, c;        // one-to-rest
  double ab, ac, bc;     // pairwise, on reduced two-qubit states
};

Negativities all_negativities(const DensityMatrix& rho) {
  Negativities n{};
  n.a = negativity(rho, 0);
  n.b = negativity(rho, 1);
  n.c = negativity(rho, 2);
  n.ab = negativity(partial_trace(rho, {2}), 0);
  n.ac = negativity(partial_trace(rho, {1}), 0);
  n.bc = negativity(partial_trace(rho, {0}), 0);
  return n;
}

double pi_from(const Negativities& n) {
  const double pi_a = n.a * n.a - n.ab * n.ab - n.ac * n.ac;
  const double pi_b = n.b * n.b - n.ab * n.ab - n.bc * n.bc;
  const double pi_c = n.c * n.c - n.ac * n.ac - n.bc * n.bc;
  return clamp_report((pi_a + pi_b + pi_c) / 3.0);
}

// Detects whether the rank <= 2 support of rho matches the two-branch
// Rank2Family pattern (amplitudes on indices 2..5 with a[2] = -a[3] and
// a[4] = a[5]), returning the extracted (p, x1, x2).
struct PatternMatch {
  bool matched = false;
  double p = 0.0, x1 = 0.0, x2 = 0.0;
};

PatternMatch match_rank2_pattern(const SpectralDecomposition& d, double rank_tol,
                                 double pattern_tol) {
  PatternMatch out;
  double x1 = 0.0, x2 = 0.0;
  bool first = true;
  for (size_t j = 0; j < d.eigenvalues.size(); ++j) {
    if (d.eigenvalues[j] <= rank_tol) continue;
    const int col = static_cast<int>(j);
    double off_support = 0.0;
    for (int i : {0, 1, 6, 7}) off_support += std::norm(d.eigenvectors(i, col));
    const double residual =
        std::max({std::sqrt(off_support),
                  std::abs(d.eigenvectors(2, col) + d.eigenvectors(3, col)),
                  std::abs(d.eigenvectors(4, col) - d.eigenvectors(5, col))});
    if (residual > pattern_tol) return out;
    if (first) {
      x1 = std::sqrt(std::norm(d.eigenvectors(2, col)) + std::norm(d.eigenvectors(3, col)));
      x2 = std::sqrt(std::norm(d.eigenvectors(4, col)) + std::norm(d.eigenvectors(5, col)));
      out.p = d.eigenvalues[j];
      first = false;
    }
  }
  if (first) return out;
  out.matched = true;
  out.x1 = std::min(1.0, x1);
  out.x2 = x2;
  return out;
}

// True when every significant eigenvector is supported on one shared basis
// pair {2k, 2k+1}, i.e. the first two qubits carry a fixed basis factor and
// every state in the support is a product state (tangle 0).
bool common_product_support(const SpectralDecomposition& d, double rank_tol, double tol) {
  for (int k = 0; k < 4; ++k) {
    bool all_match = true;
    for (size_t j = 0; j < d.eigenvalues.size() && all_match; ++j) {
      if (d.eigenvalues[j] <= rank_tol) continue;
      double off = 0.0;
      for (int i = 0; i < 8; ++i)
        if (i != 2 * k && i != 2 * k + 1) off += std::norm(d.eigenvectors(i, static_cast<int>(j)));
      if (std::sqrt(off) > tol) all_match = false;
    }
    if (all_match) return true;
  }
  return false;
}

}  // namespace

double negativity(const DensityMatrix& rho, int part) {
  const ComplexMatrix pt = partial_transpose(rho, part);
  return clamp_report(trace_norm(pt) - 1.0);
}

double pi_tangle(const DensityMatrix& rho3) {
  require_three_qubits(rho3);
  return pi_from(all_negativities(rho3));
}

double pi_tangle(const StateVector& psi3) {
  if (psi3.num_qubits() != 3) throw std::invalid_argument("three-qubit state required");
  return pi_tangle(DensityMatrix::from_pure(psi3));
}

EntanglementRecord analyze_three_qubit(const StateVector& psi) {
  if (psi.num_qubits() != 3) throw std::invalid_argument("three-qubit state required");
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  const Negativities n = all_negativities(rho);
  EntanglementRecord rec;
  rec.three_tangle = clamp_report(three_tangle(psi));
  rec.pi_tangle = pi_from(n);
  rec.concurrence_ab = clamp_report(concurrence(partial_trace(rho, {2})));
  rec.concurrence_ac = clamp_report(concurrence(partial_trace(rho, {1})));
  rec.concurrence_bc = clamp_report(concurrence(partial_trace(rho, {0})));
  rec.negativity_a = n.a;
  rec.negativity_b = n.b;
  rec.negativity_c = n.c;
  return rec;
}

EntanglementRecord analyze_three_qubit(const DensityMatrix& rho) {
  require_three_qubits(rho);
  const Negativities n = all_negativities(rho);
  EntanglementRecord rec;
  rec.pi_tangle = pi_from(n);
  rec.concurrence_ab = clamp_report(concurrence(partial_trace(rho, {2})));
  rec.concurrence_ac = clamp_report(concurrence(partial_trace(rho, {1})));
  rec.concurrence_bc = clamp_report(concurrence(partial_trace(rho, {0})));
  rec.negativity_a = n.a;
  rec.negativity_b = n.b;
  rec.negativity_c = n.c;

  const SpectralDecomposition d = hermitian_eig(rho.matrix());
  const double rank_tol = 1e-9;
  const int rank = d.rank(rank_tol);
  if (rank == 1) {
    std::vector<cd> amps(8);
    double nrm = 0.0;
    for (int i = 0; i < 8; ++i) {
      amps[i] = d.eigenvectors(i, 0);
      nrm += std::norm(amps[i]);
    }
    const double inv = 1.0 / std::sqrt(nrm);
    for (cd& a : amps) a *= inv;
    rec.three_tangle = clamp_report(three_tangle(StateVector(3, std::move(amps))));
    return rec;
  }
  if (rank == 2) {
    const PatternMatch m = match_rank2_pattern(d, rank_tol, 1e-8);
    if (m.matched) {
      rec.three_tangle = rank2_three_tangle(Rank2Family(m.x1, std::clamp(m.p, 0.0, 1.0)));
      rec.p = m.p;
      rec.x1 = m.x1;
      rec.x2 = m.x2;
      return rec;
    }
    if (common_product_support(d, rank_tol, 1e-8)) {
      rec.three_tangle = 0.0;
      return rec;
    }
  }
  return rec;  // three_tangle left empty: no applicable pattern
}

}  // namespace qtangle
