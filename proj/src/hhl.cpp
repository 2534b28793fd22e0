// SPDX-License-Identifier: MIT
#include "qtangle/hhl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtangle/eig.hpp"
#include "qtangle/pi_tangle.hpp"
#include "qtangle/three_tangle.hpp"

namespace qtangle {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

const ComplexMatrix& HhlProblem::a_matrix() {
  static const ComplexMatrix a{{1.5, 0.5}, {0.5, 1.5}};
  return a;
}

double HhlProblem::evolution_time() { return std::numbers::pi / 2.0; }

double HhlProblem::default_c() {
  return (std::sin(std::numbers::pi / 4.0) + 2.0 * std::sin(std::numbers::pi / 8.0)) / 2.0;
}

HhlProblem::HhlProblem(double b0_in, double b1_in, double c_in) : b0(b0_in), b1(b1_in), c(c_in) {
  if (std::abs(b0 * b0 + b1 * b1 - 1.0) > 1e-12)
    throw std::invalid_argument("input amplitudes must be normalized");
  // min eigenvalue of the fixed system matrix is 1
  if (!(c > 0.0) || c > 1.0 + 1e-15)
    throw std::invalid_argument("rotation constant must lie in (0, 1]");
}

Circuit hhl_circuit(const HhlProblem& p) {
  const Gate u = hamiltonian_evolution(HhlProblem::a_matrix(), p.t);

  Circuit qpe_block(4);
  qpe_block.add(gates::h(), {0});
  qpe_block.add(gates::h(), {1});
  // clock qubit j controls U^(2^(clock_bits-1-j)) (qubit 0 is the high bit)
  qpe_block.add(controlled_power(u, 2, 0, {2}));
  qpe_block.add(controlled_power(u, 1, 1, {2}));
  qpe_block.append(qft(2, true), {0, 1});

  Circuit c(4);
  c.append(qpe_block);
  c.add_marker("post-qpe");
  for (int v = 1; v <= 3; ++v) {
    const double theta = 2.0 * std::asin(p.c / v);
    c.add(gates::controlled_on_value(gates::ry(theta), 2, v), {0, 1, 3});
  }
  c.add_marker("post-rotation");
  c.append(qpe_block.inverse());
  c.add_marker("post-inverse-qpe");
  return c;
}

HhlStageStates hhl_run(const HhlProblem& p) {
  const StateVector b_state(1, {cd(p.b0), cd(p.b1)});
  const StateVector initial =
      kron(kron(StateVector(2), b_state), StateVector(1));  // |00> b |0>
  const StageTrace trace = run(hhl_circuit(p), initial);

  HhlStageStates out{trace.at("post-qpe"),
                     trace.at("post-rotation"),
                     trace.at("post-inverse-qpe"),
                     StateVector(3),
                     DensityMatrix::from_pure(StateVector(3)),
                     DensityMatrix::from_pure(StateVector(3)),
                     StateVector(1)};

  // psi1 factorizes as (clock, b) (x) |0>_ancilla.
  double leak = 0.0;
  std::vector<cd> bar(8);
  for (int j = 0; j < 8; ++j) {
    bar[j] = out.psi1[2 * j];
    leak += std::norm(out.psi1[2 * j + 1]);
  }
  if (leak > 1e-20) throw std::logic_error("ancilla unexpectedly populated before rotation");
  out.psi1_bar = StateVector(3, std::move(bar));

  out.rho2_bar = partial_trace(DensityMatrix::from_pure(out.psi2), {3});
  out.rho3_bar = partial_trace(DensityMatrix::from_pure(out.psi3), {3});

  // Ancilla-1 branch of the b register inside the clock-|00> block.
  std::vector<cd> sol{out.psi3[1], out.psi3[3]};
  double nrm = std::sqrt(std::norm(sol[0]) + std::norm(sol[1]));
  for (cd& a : sol) a /= nrm;
  // Reference direction: normalized A^{-1} b (A is [[3,1],[1,3]]/2, so
  // A^{-1} = [[3,-1],[-1,3]]/4).
  const double w0 = (3.0 * p.b0 - p.b1) / 4.0;
  const double w1 = (-p.b0 + 3.0 * p.b1) / 4.0;
  const double wn = std::hypot(w0, w1);
  const StateVector reference(1, {cd(w0 / wn), cd(w1 / wn)});
  out.solution = phase_align(reference, StateVector(1, std::move(sol)));
  return out;
}

StateVector qpe(const ComplexMatrix& a, double t, int clock_bits, const StateVector& input) {
  if (clock_bits < 1 || clock_bits > 8) throw std::invalid_argument("unsupported clock size");
  if (a.rows() != input.dim()) throw std::invalid_argument("matrix size does not match input");
  const int n_sys = input.num_qubits();
  const int total = clock_bits + n_sys;
  const Gate u = hamiltonian_evolution(a, t);

  Circuit c(total);
  std::vector<int> sys(n_sys);
  for (int q = 0; q < n_sys; ++q) sys[q] = clock_bits + q;
  for (int j = 0; j < clock_bits; ++j) c.add(gates::h(), {j});
  for (int j = 0; j < clock_bits; ++j)
    c.add(controlled_power(u, 1 << (clock_bits - 1 - j), j, sys));
  std::vector<int> clock(clock_bits);
  for (int j = 0; j < clock_bits; ++j) clock[j] = j;
  c.append(qft(clock_bits, true), clock);

  return run(c, kron(StateVector(clock_bits), input)).final_state();
}

ClosedFormParams closed_form_params(const HhlProblem& p) {
  ClosedFormParams cf{};
  cf.beta1 = (p.b0 - p.b1) * kInvSqrt2;
  cf.beta2 = (p.b0 + p.b1) * kInvSqrt2;
  const double r1 = std::sqrt(1.0 - p.c * p.c);
  const double r2 = std::sqrt(1.0 - p.c * p.c / 4.0);
  cf.gamma = r1 * r2 + p.c * p.c / 2.0;
  const double k = 1.0 - cf.gamma * cf.gamma;
  const double bb = cf.beta1 * cf.beta1 * cf.beta2 * cf.beta2;
  cf.s = std::sqrt(std::max(0.0, 1.0 - 4.0 * bb * k));
  cf.p = 0.5 * (1.0 + cf.s);
  cf.a1 = cf.beta1 * (1.0 + cf.s - 2.0 * cf.beta2 * cf.beta2 * k);
  cf.a2 = cf.beta2 * cf.gamma * (1.0 + cf.s);
  const double an = std::hypot(cf.a1, cf.a2);
  cf.x1 = cf.a1 / an;
  cf.x2 = cf.a2 / an;

  cf.a_coef = 0.5 * ((p.b0 - p.b1) * r1 + (p.b0 + p.b1) * r2);
  cf.b_coef = 0.5 * (-(p.b0 - p.b1) * r1 + (p.b0 + p.b1) * r2);
  cf.c1 = p.c * (3.0 * p.b0 - p.b1) / 4.0;
  cf.c2 = p.c * (-p.b0 + 3.0 * p.b1) / 4.0;

  // rho3_bar restricted to the b register: [[A^2 + C1^2, AB + C1 C2],
  // [AB + C1 C2, B^2 + C2^2]]; q is its top eigenvalue.
  const double diff = cf.a_coef * cf.a_coef - cf.b_coef * cf.b_coef + cf.c1 * cf.c1 -
                      cf.c2 * cf.c2;
  const double off = cf.a_coef * cf.b_coef + cf.c1 * cf.c2;
  const double root = std::sqrt(diff * diff + 4.0 * off * off);
  cf.q = 0.5 * (1.0 + root);
  // Two algebraically equivalent eigenvector forms; pick the one that stays
  // away from 0/0 for the actual sign of the diagonal gap.
  if (diff >= 0.0) {
    cf.f1 = diff + root;
    cf.f2 = 2.0 * off;
  } else {
    cf.f1 = 2.0 * off;
    cf.f2 = root - diff;
  }
  const double fn = std::hypot(cf.f1, cf.f2);
  if (fn > 1e-15) {
    cf.y1 = cf.f1 / fn;
    cf.y2 = cf.f2 / fn;
  } else {  // degenerate (q = 1/2): any basis works, pick |0>
    cf.y1 = 1.0;
    cf.y2 = 0.0;
  }
  return cf;
}

StateVector closed_form_psi1_bar(const HhlProblem& p) {
  const ClosedFormParams cf = closed_form_params(p);
  std::vector<cd> a(8, cd(0.0));
  a[2] = cf.beta1 * kInvSqrt2;
  a[3] = -cf.beta1 * kInvSqrt2;
  a[4] = cf.beta2 * kInvSqrt2;
  a[5] = cf.beta2 * kInvSqrt2;
  return StateVector(3, std::move(a));
}

StateVector closed_form_psi1(const HhlProblem& p) {
  const StateVector bar = closed_form_psi1_bar(p);
  std::vector<cd> a(16, cd(0.0));
  for (int j = 0; j < 8; ++j) a[2 * j] = bar[j];
  return StateVector(4, std::move(a));
}

StateVector closed_form_psi2(const HhlProblem& p) {
  const ClosedFormParams cf = closed_form_params(p);
  const double r1 = std::sqrt(1.0 - p.c * p.c);
  const double r2 = std::sqrt(1.0 - p.c * p.c / 4.0);
  const double u1[2] = {kInvSqrt2, -kInvSqrt2};  // eigenvector for eigenvalue 1
  const double u2[2] = {kInvSqrt2, kInvSqrt2};   // eigenvector for eigenvalue 2
  const double w1[2] = {r1, p.c};
  const double w2[2] = {r2, p.c / 2.0};
  std::vector<cd> a(16, cd(0.0));
  for (int b = 0; b < 2; ++b)
    for (int anc = 0; anc < 2; ++anc) {
      a[4 + 2 * b + anc] = cf.beta1 * u1[b] * w1[anc];   // clock |01>
      a[8 + 2 * b + anc] = cf.beta2 * u2[b] * w2[anc];   // clock |10>
    }
  return StateVector(4, std::move(a));
}

StateVector closed_form_psi3(const HhlProblem& p) {
  const ClosedFormParams cf = closed_form_params(p);
  std::vector<cd> a(16, cd(0.0));
  a[0] = cf.a_coef;
  a[1] = cf.c1;
  a[2] = cf.b_coef;
  a[3] = cf.c2;
  return StateVector(4, std::move(a));
}

namespace {

// Stage-2 three-tangle: convex hull of the minimal characteristic curve at
// the closed-form (p, x1, x2); both branch signs are scanned.
double stage2_tau(const ClosedFormParams& cf) {
  const double gap = std::abs(cf.x1 * cf.x1 - cf.x2 * cf.x2);
  const double p_minus = 0.5 * (1.0 - gap), p_plus = 0.5 * (1.0 + gap);
  if (cf.p >= p_minus && cf.p <= p_plus) return 0.0;
  const double base = (2.0 * cf.p - 1.0) * cf.x1 * cf.x2;
  const double swing = std::sqrt(std::max(0.0, cf.p * (1.0 - cf.p))) *
                       (cf.x1 * cf.x1 - cf.x2 * cf.x2);
  const double g_plus = 4.0 * (base + swing) * (base + swing);
  const double g_minus = 4.0 * (base - swing) * (base - swing);
  return std::min(g_plus, g_minus);
}

}  // namespace

ClosedFormTangles closed_form_tangles(const HhlProblem& p) {
  const ClosedFormParams cf = closed_form_params(p);
  ClosedFormTangles t{};
  const double diff_sq = (p.b0 * p.b0 - p.b1 * p.b1) * (p.b0 * p.b0 - p.b1 * p.b1);
  t.tau3_psi1 = diff_sq;
  t.pi3_psi1 = diff_sq;
  t.tau3_rho2 = stage2_tau(cf);
  const double m = 2.0 * cf.p - 1.0;
  t.pi3_rho2 = 4.0 * cf.x1 * cf.x1 * cf.x2 * cf.x2 * m * m;
  t.tau3_rho3 = 0.0;
  t.pi3_rho3 = 0.0;
  return t;
}

std::vector<CheckResult> cross_validate(const HhlProblem& p) { return cross_validate(p, p); }

std::vector<CheckResult> cross_validate(const HhlProblem& p, const HhlProblem& closed_form_problem) {
  constexpr double kTol = 1e-8;
  const HhlStageStates sim = hhl_run(p);
  const ClosedFormParams cf = closed_form_params(closed_form_problem);
  const ClosedFormTangles tangles = closed_form_tangles(closed_form_problem);

  std::vector<CheckResult> out;
  auto add = [&out](const std::string& name, double disc, double tol) {
    out.push_back({name, disc, tol, disc <= tol});
  };

  // (a) three-tangle of the post-estimation pure state
  add("psi1 three-tangle vs closed form",
      std::abs(three_tangle(sim.psi1_bar) - tangles.tau3_psi1), kTol);

  // (b) spectral decomposition of rho2_bar: weight, coefficients, pattern
  {
    const SpectralDecomposition d = hermitian_eig(sim.rho2_bar.matrix());
    const double p_sim = d.eigenvalues[0];
    double off = 0.0;
    for (int i : {0, 1, 6, 7}) off += std::norm(d.eigenvectors(i, 0));
    const double pattern =
        std::max({std::sqrt(off), std::abs(d.eigenvectors(2, 0) + d.eigenvectors(3, 0)),
                  std::abs(d.eigenvectors(4, 0) - d.eigenvectors(5, 0))});
    const double x1_sim =
        std::sqrt(std::norm(d.eigenvectors(2, 0)) + std::norm(d.eigenvectors(3, 0)));
    const double x2_sim =
        std::sqrt(std::norm(d.eigenvectors(4, 0)) + std::norm(d.eigenvectors(5, 0)));
    const double disc = std::max({std::abs(p_sim - cf.p), std::abs(x1_sim - std::abs(cf.x1)),
                                  std::abs(x2_sim - std::abs(cf.x2)), pattern,
                                  (d.eigenvalues.size() > 2) ? d.eigenvalues[2] : 0.0});
    add("rho2 spectral decomposition vs closed form", disc, kTol);

    // (c) rank-2 hull at the simulated parameters vs the closed-form value
    const Rank2Family fam(std::min(1.0, x1_sim), std::clamp(p_sim, 0.0, 1.0));
    add("rank-2 hull at simulated parameters vs closed form",
        std::abs(rank2_three_tangle(fam) - tangles.tau3_rho2), kTol);
  }

  // (d) numerical pi-tangle of rho2_bar
  add("rho2 pi-tangle vs closed form", std::abs(pi_tangle(sim.rho2_bar) - tangles.pi3_rho2),
      kTol);

  // (e) spectral decomposition of rho3_bar
  {
    const SpectralDecomposition d = hermitian_eig(sim.rho3_bar.matrix());
    const double q_sim = d.eigenvalues[0];
    double disc = std::abs(q_sim - cf.q);
    for (size_t j = 0; j < d.eigenvalues.size(); ++j) {
      if (d.eigenvalues[j] <= 1e-9) continue;
      double off = 0.0;
      for (int i = 2; i < 8; ++i) off += std::norm(d.eigenvectors(i, static_cast<int>(j)));
      disc = std::max(disc, std::sqrt(off));
    }
    if (std::abs(2.0 * q_sim - 1.0) > 1e-6) {  // eigenvector well-defined
      const cd ov = std::conj(cd(cf.y1)) * d.eigenvectors(0, 0) +
                    std::conj(cd(cf.y2)) * d.eigenvectors(1, 0);
      disc = std::max(disc, 1.0 - std::abs(ov));
    }
    add("rho3 spectral decomposition vs closed form", disc, kTol);
  }
  return out;
}

}  // namespace qtangle
