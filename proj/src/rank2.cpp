// SPDX-License-Identifier: MIT
#include "qtangle/rank2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtangle/three_tangle.hpp"

namespace qtangle {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

Rank2Family::Rank2Family(double x1_in, double p_in) {
  if (!(x1_in >= 0.0 && x1_in <= 1.0)) throw std::invalid_argument("x1 must lie in [0, 1]");
  if (!(p_in >= 0.0 && p_in <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  x1 = x1_in;
  x2 = std::sqrt(std::max(0.0, 1.0 - x1_in * x1_in));
  p = p_in;
}

StateVector Rank2Family::phi1() const {
  std::vector<cd> a(8, cd(0.0));
  a[2] = x1 * kInvSqrt2;
  a[3] = -x1 * kInvSqrt2;
  a[4] = x2 * kInvSqrt2;
  a[5] = x2 * kInvSqrt2;
  return StateVector(3, std::move(a));
}

StateVector Rank2Family::phi2() const {
  std::vector<cd> a(8, cd(0.0));
  a[2] = -x2 * kInvSqrt2;
  a[3] = x2 * kInvSqrt2;
  a[4] = x1 * kInvSqrt2;
  a[5] = x1 * kInvSqrt2;
  return StateVector(3, std::move(a));
}

DensityMatrix Rank2Family::rho() const {
  const StateVector f1 = phi1();
  const StateVector f2 = phi2();
  ComplexMatrix m(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      m(r, c) = p * f1[r] * std::conj(f1[c]) + (1.0 - p) * f2[r] * std::conj(f2[c]);
  return DensityMatrix(std::move(m), {2, 2, 2});
}

StateVector Rank2Family::z_state(double theta) const {
  const cd w = std::polar(1.0, theta);
  const double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
  // Coefficients on the product frame e1, e2.
  const cd u = sp * x1 + w * sq * x2;
  const cd v = sp * x2 - w * sq * x1;
  std::vector<cd> a(8, cd(0.0));
  a[2] = u * kInvSqrt2;
  a[3] = -u * kInvSqrt2;
  a[4] = v * kInvSqrt2;
  a[5] = v * kInvSqrt2;
  return StateVector(3, std::move(a));
}

double rank2_characteristic(const Rank2Family& fam, double theta) {
  const cd w = std::polar(1.0, theta);
  const double sp = std::sqrt(fam.p), sq = std::sqrt(1.0 - fam.p);
  const cd y1 = (sp * fam.x1 + w * sq * fam.x2) * kInvSqrt2;
  const cd y2 = (sp * fam.x2 - w * sq * fam.x1) * kInvSqrt2;
  return 16.0 * std::norm(y1) * std::norm(y2);
}

double rank2_f(const Rank2Family& fam) {
  return std::min(rank2_characteristic(fam, 0.0),
                  rank2_characteristic(fam, std::numbers::pi));
}

std::pair<double, double> rank2_p_bounds(const Rank2Family& fam) {
  const double gap = std::abs(fam.x1 * fam.x1 - fam.x2 * fam.x2);
  return {0.5 * (1.0 - gap), 0.5 * (1.0 + gap)};
}

double rank2_three_tangle(const Rank2Family& fam) {
  const auto [p_minus, p_plus] = rank2_p_bounds(fam);
  if (fam.p >= p_minus && fam.p <= p_plus) return 0.0;
  return rank2_f(fam);
}

namespace {

// --- Decomposition search -------------------------------------------------
//
// Every size-m pure-state ensemble realizing rho comes from an m x 2 isometry
// applied to the subnormalized branches sqrt(p) phi1, sqrt(1-p) phi2. Members
// stay inside span{e1, e2}; on that frame a member with coefficients (u, v)
// has weight q = |u|^2 + |v|^2 and weighted tangle 4|uv|^2 / q, which is what
// the scan evaluates. Isometries are parameterized by Givens chains; an
// initial grid scan is refined locally around the best candidates.

struct GivensChain {
  int m = 2;
  std::vector<std::pair<int, int>> pairs;  // applied first-to-last
};

struct Candidate {
  double value = 0.0;
  std::vector<double> params;
};

struct SpanBasis {
  // e-frame coordinates of the subnormalized branches.
  cd b0_e1, b0_e2;  // sqrt(p) phi1
  cd b1_e1, b1_e2;  // sqrt(1-p) phi2
};

double evaluate(const GivensChain& chain, const std::vector<double>& params,
                const SpanBasis& basis) {
  // Columns of the isometry, stored per row.
  std::array<cd, 4> col0{}, col1{};
  col0[0] = 1.0;
  col1[1] = 1.0;
  for (size_t g = 0; g < chain.pairs.size(); ++g) {
    const auto [r, s] = chain.pairs[g];
    const double a = params[2 * g];
    const double c = std::cos(a), sn = std::sin(a);
    const cd ep = std::polar(1.0, params[2 * g + 1]);
    const cd em = std::conj(ep);
    const cd r0 = col0[r], s0 = col0[s];
    col0[r] = c * r0 + sn * ep * s0;
    col0[s] = -sn * em * r0 + c * s0;
    const cd r1 = col1[r], s1 = col1[s];
    col1[r] = c * r1 + sn * ep * s1;
    col1[s] = -sn * em * r1 + c * s1;
  }
  double total = 0.0;
  for (int j = 0; j < chain.m; ++j) {
    const cd u = col0[j] * basis.b0_e1 + col1[j] * basis.b1_e1;
    const cd v = col0[j] * basis.b0_e2 + col1[j] * basis.b1_e2;
    const double q = std::norm(u) + std::norm(v);
    if (q < 1e-15) continue;
    total += 4.0 * std::norm(u) * std::norm(v) / q;
  }
  return total;
}

std::vector<double> linspace_closed(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
  return v;
}

std::vector<double> linspace_periodic(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / count;
  return v;
}

void keep_best(std::vector<Candidate>& top, size_t cap, Candidate cand) {
  top.push_back(std::move(cand));
  std::sort(top.begin(), top.end(),
            [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  if (top.size() > cap) top.resize(cap);
}

Candidate search_chain(const GivensChain& chain, const SpanBasis& basis, double angle_step,
                       double phase_step, size_t keep) {
  const int num_givens = static_cast<int>(chain.pairs.size());
  const int num_params = 2 * num_givens;
  const double half_pi = 0.5 * std::numbers::pi;
  const double two_pi = 2.0 * std::numbers::pi;

  const int angle_count = std::max(2, static_cast<int>(std::lround(half_pi / angle_step)) + 1);
  const int phase_count = std::max(4, static_cast<int>(std::lround(two_pi / phase_step)));
  const std::vector<double> angles = linspace_closed(0.0, half_pi, angle_count);
  const std::vector<double> phases = linspace_periodic(0.0, two_pi, phase_count);

  std::vector<Candidate> top;
  std::vector<int> odo(num_params, 0);
  std::vector<double> params(num_params, 0.0);
  while (true) {
    for (int i = 0; i < num_params; ++i)
      params[i] = (i % 2 == 0) ? angles[odo[i]] : phases[odo[i]];
    const double value = evaluate(chain, params, basis);
    if (top.size() < keep || value < top.back().value)
      keep_best(top, keep, {value, params});
    int i = num_params - 1;
    for (; i >= 0; --i) {
      const int limit = (i % 2 == 0) ? angle_count : phase_count;
      if (++odo[i] < limit) break;
      odo[i] = 0;
    }
    if (i < 0) break;
  }

  // Local refinement around each kept candidate: 3 levels of +/- one step
  // per parameter, shrinking the step by 4 each level.
  Candidate best = top.front();
  for (Candidate cand : top) {
    double astep = angle_step, pstep = phase_step;
    for (int level = 0; level < 3; ++level) {
      astep /= 4.0;
      pstep /= 4.0;
      bool improved = true;
      for (int pass = 0; improved && pass < 200; ++pass) {
        improved = false;
        for (int i = 0; i < num_params; ++i) {
          const double step = (i % 2 == 0) ? astep : pstep;
          for (double delta : {-step, step}) {
            std::vector<double> trial = cand.params;
            trial[i] += delta;
            const double value = evaluate(chain, trial, basis);
            if (value < cand.value - 1e-15) {
              cand.value = value;
              cand.params = std::move(trial);
              improved = true;
            }
          }
        }
      }
    }
    if (cand.value < best.value) best = cand;
  }
  return best;
}

}  // namespace

RoofSearchResult rank2_roof_upper_bound(const Rank2Family& fam, int max_elements) {
  if (max_elements < 2 || max_elements > 4)
    throw std::invalid_argument("ensemble size must lie in [2, 4]");

  const double sp = std::sqrt(fam.p), sq = std::sqrt(1.0 - fam.p);
  const SpanBasis basis{sp * fam.x1, sp * fam.x2, -sq * fam.x2, sq * fam.x1};

  const GivensChain chain2{2, {{0, 1}}};
  const GivensChain chain3{3, {{0, 1}, {1, 2}, {0, 2}}};
  const GivensChain chain4{4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}};

  Candidate best = search_chain(chain2, basis, 0.01, 0.01, 6);
  GivensChain best_chain = chain2;
  if (max_elements >= 3) {
    Candidate c3 = search_chain(chain3, basis, 0.4, 0.4, 6);
    if (c3.value < best.value) {
      best = c3;
      best_chain = chain3;
    }
  }
  if (max_elements >= 4) {
    Candidate c4 = search_chain(chain4, basis, 0.8, 0.8, 4);
    if (c4.value < best.value) {
      best = c4;
      best_chain = chain4;
    }
  }

  // Rebuild the winning ensemble explicitly: exact member tangles via the
  // hyperdeterminant and a reconstruction certificate against rho.
  std::array<cd, 4> col0{}, col1{};
  col0[0] = 1.0;
  col1[1] = 1.0;
  for (size_t g = 0; g < best_chain.pairs.size(); ++g) {
    const auto [r, s] = best_chain.pairs[g];
    const double a = best.params[2 * g];
    const double c = std::cos(a), sn = std::sin(a);
    const cd ep = std::polar(1.0, best.params[2 * g + 1]);
    const cd r0 = col0[r], s0 = col0[s];
    col0[r] = c * r0 + sn * ep * s0;
    col0[s] = -sn * std::conj(ep) * r0 + c * s0;
    const cd r1 = col1[r], s1 = col1[s];
    col1[r] = c * r1 + sn * ep * s1;
    col1[s] = -sn * std::conj(ep) * r1 + c * s1;
  }

  const StateVector f1 = fam.phi1();
  const StateVector f2 = fam.phi2();
  RoofSearchResult result;
  ComplexMatrix accum(8, 8);
  double value = 0.0;
  for (int j = 0; j < best_chain.m; ++j) {
    std::vector<cd> amps(8, cd(0.0));
    for (int i = 0; i < 8; ++i) amps[i] = col0[j] * sp * f1[i] + col1[j] * sq * f2[i];
    double q = 0.0;
    for (const cd& a : amps) q += std::norm(a);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) accum(r, c) += amps[r] * std::conj(amps[c]);
    if (q < 1e-12) continue;
    value += three_tangle_raw(amps) / q;  // degree-4 form / q = q * tau3(normalized)
    const double inv = 1.0 / std::sqrt(q);
    for (cd& a : amps) a *= inv;
    result.weights.push_back(q);
    result.members.emplace_back(3, std::move(amps));
  }
  result.value = value;
  result.reconstruction_error = (accum - fam.rho().matrix()).max_abs();
  return result;
}

}  // namespace qtangle
