// SPDX-License-Identifier: MIT
// The rank-2 three-qubit mixed-state family arising from conditioned
// eigensolver registers, its characteristic curve, and three-tangle bounds.
#pragma once

#include <utility>
#include <vector>

#include "qtangle/density.hpp"
#include "qtangle/state.hpp"

namespace qtangle {

// Two-branch family on the orthonormal product frame
//   e1 = (|010> - |011>)/sqrt(2),  e2 = (|100> + |101>)/sqrt(2):
//   phi1 = x1 e1 + x2 e2,  phi2 = -x2 e1 + x1 e2,  x2 = sqrt(1 - x1^2),
//   rho(p) = p |phi1><phi1| + (1-p) |phi2><phi2|.
struct Rank2Family {
  double x1 = 1.0;
  double x2 = 0.0;
  double p = 1.0;

  // Validates x1 in [0, 1] and p in [0, 1].
  Rank2Family(double x1, double p);

  StateVector phi1() const;
  StateVector phi2() const;
  DensityMatrix rho() const;
  // Z(theta) = sqrt(p) phi1 - e^{i theta} sqrt(1-p) phi2 (unit norm since
  // phi1 and phi2 are orthonormal).
  StateVector z_state(double theta) const;
};

// tau3(Z(theta)) * ||Z||^4 = 16 |y1 y2|^2 with
// y1 = (sqrt(p) x1 + e^{i theta} sqrt(1-p) x2)/sqrt(2),
// y2 = (sqrt(p) x2 - e^{i theta} sqrt(1-p) x1)/sqrt(2).
double rank2_characteristic(const Rank2Family& fam, double theta);

// min over theta of the characteristic curve; the minimum sits at theta in
// {0, pi} (the curve is a concave quadratic in cos theta).
double rank2_f(const Rank2Family& fam);

// Zeros of f: p_minus/p_plus = (1 -/+ |x1^2 - x2^2|)/2.
std::pair<double, double> rank2_p_bounds(const Rank2Family& fam);

// Convex hull of f over p: 0 on [p_minus, p_plus], f(p) outside.
double rank2_three_tangle(const Rank2Family& fam);

// Numerical decomposition search: scans pure-state ensembles of 2 to
// max_elements members realizing fam.rho() and returns the smallest average
// three-tangle found. Every candidate ensemble is certified by rebuilding the
// density matrix (reconstruction_error) and member tangles are evaluated with
// the full hyperdeterminant.
struct RoofSearchResult {
  double value = 0.0;
  std::vector<double> weights;
  std::vector<StateVector> members;
  double reconstruction_error = 0.0;
};

RoofSearchResult rank2_roof_upper_bound(const Rank2Family& fam, int max_elements = 4);

}  // namespace qtangle
