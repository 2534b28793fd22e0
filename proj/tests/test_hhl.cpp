// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qtangle/eig.hpp"
#include "qtangle/hhl.hpp"
#include "qtangle/pi_tangle.hpp"
#include "qtangle/three_tangle.hpp"
#include "test_helpers.hpp"

using namespace qtangle;

namespace {

HhlProblem problem_from_fraction(double b0_sq) {
  return HhlProblem(std::sqrt(b0_sq), std::sqrt(1.0 - b0_sq));
}

}  // namespace

TEST_CASE("problem construction validates input") {
  CHECK_THROWS_AS(HhlProblem(0.6, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(HhlProblem(1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(HhlProblem(1.0, 0.0, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(HhlProblem(1.0, 0.0, -0.3), std::invalid_argument);
  const double expected_c =
      (std::sin(std::numbers::pi / 4.0) + 2.0 * std::sin(std::numbers::pi / 8.0)) / 2.0;
  CHECK(HhlProblem::default_c() == doctest::Approx(expected_c).epsilon(1e-15));
  CHECK(HhlProblem::evolution_time() == doctest::Approx(std::numbers::pi / 2.0));
  // system matrix eigenvalues are 1 and 2
  const SpectralDecomposition d = hermitian_eig(HhlProblem::a_matrix());
  CHECK(d.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("phase estimation writes the eigenvalue code into the clock register") {
  const double r = 1.0 / std::numbers::sqrt2;
  const StateVector u1(1, {r, -r});  // eigenvalue 1 -> clock |01>
  const StateVector out1 = qpe(HhlProblem::a_matrix(), HhlProblem::evolution_time(), 2, u1);
  CHECK(out1.probability(2) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(out1.probability(3) == doctest::Approx(0.5).epsilon(1e-10));
  const StateVector u2(1, {r, r});  // eigenvalue 2 -> clock |10>
  const StateVector out2 = qpe(HhlProblem::a_matrix(), HhlProblem::evolution_time(), 2, u2);
  CHECK(out2.probability(4) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(out2.probability(5) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK_THROWS_AS(qpe(HhlProblem::a_matrix(), 1.0, 0, u1), std::invalid_argument);
  CHECK_THROWS_AS(qpe(ComplexMatrix::identity(4), 1.0, 2, u1), std::invalid_argument);
}

TEST_CASE("closed-form parameters satisfy their defining identities") {
  for (double b0_sq : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    const HhlProblem p = problem_from_fraction(b0_sq);
    const ClosedFormParams cf = closed_form_params(p);
    CHECK(cf.beta1 * cf.beta1 + cf.beta2 * cf.beta2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cf.p >= 0.5);
    CHECK(cf.p == doctest::Approx(0.5 * (1.0 + cf.s)).epsilon(1e-12));
    CHECK(cf.x1 * cf.x1 + cf.x2 * cf.x2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cf.y1 * cf.y1 + cf.y2 * cf.y2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cf.q >= 0.5);
    // the four final-state coefficients carry the whole norm
    const double total = cf.a_coef * cf.a_coef + cf.b_coef * cf.b_coef + cf.c1 * cf.c1 +
                         cf.c2 * cf.c2;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    // gamma is the cosine of the angle between the two ancilla branches
    const double r1 = std::sqrt(1.0 - p.c * p.c);
    const double r2 = std::sqrt(1.0 - p.c * p.c / 4.0);
    CHECK(cf.gamma == doctest::Approx(r1 * r2 + p.c * p.c / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("simulated stage states match the closed forms") {
  for (double b0_sq : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    const HhlProblem p = problem_from_fraction(b0_sq);
    const HhlStageStates sim = hhl_run(p);
    CHECK(phase_aligned_linf(closed_form_psi1(p), sim.psi1) < 1e-10);
    CHECK(phase_aligned_linf(closed_form_psi2(p), sim.psi2) < 1e-10);
    CHECK(phase_aligned_linf(closed_form_psi3(p), sim.psi3) < 1e-10);
    CHECK(phase_aligned_linf(closed_form_psi1_bar(p), sim.psi1_bar) < 1e-10);
  }
  // a negative input amplitude must work too
  const HhlProblem neg(0.6, -0.8);
  const HhlStageStates sim = hhl_run(neg);
  CHECK(phase_aligned_linf(closed_form_psi3(neg), sim.psi3) < 1e-10);
}

TEST_CASE("post-estimation factor matches the closed form across the sweep") {
  for (int i = 0; i <= 100; ++i) {
    const HhlProblem p = problem_from_fraction(i / 100.0);
    const HhlStageStates sim = hhl_run(p);
    CHECK(phase_aligned_linf(closed_form_psi1_bar(p), sim.psi1_bar) < 1e-10);
    // its three-tangle is the squared population imbalance
    const double expected = std::pow(p.b0 * p.b0 - p.b1 * p.b1, 2);
    CHECK(three_tangle(sim.psi1_bar) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(pi_tangle(sim.psi1_bar) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("the solution register solves the linear system") {
  const HhlStageStates sim = hhl_run(HhlProblem(1.0, 0.0));
  const double r10 = 1.0 / std::sqrt(10.0);
  CHECK(std::abs(sim.solution[0] - cd(3.0 * r10)) < 1e-10);
  CHECK(std::abs(sim.solution[1] - cd(-r10)) < 1e-10);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const double angle = (static_cast<double>(rng() >> 11) * 0x1.0p-53) * 2.0 * std::numbers::pi;
    const HhlProblem p(std::cos(angle), std::sin(angle));
    const HhlStageStates s = hhl_run(p);
    const double w0 = (3.0 * p.b0 - p.b1) / 4.0;
    const double w1 = (-p.b0 + 3.0 * p.b1) / 4.0;
    const double wn = std::hypot(w0, w1);
    CHECK(std::abs(s.solution[0] - cd(w0 / wn)) < 1e-8);
    CHECK(std::abs(s.solution[1] - cd(w1 / wn)) < 1e-8);
  }
}

TEST_CASE("mid-pipeline mixed state is rank 2 with the two-branch pattern") {
  const HhlProblem p = problem_from_fraction(0.9);
  const HhlStageStates sim = hhl_run(p);
  const ClosedFormParams cf = closed_form_params(p);
  const SpectralDecomposition d = hermitian_eig(sim.rho2_bar.matrix());
  CHECK(d.eigenvalues[0] == doctest::Approx(cf.p).epsilon(1e-9));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0 - cf.p).epsilon(1e-9));
  CHECK(d.eigenvalues[2] < 1e-9);
  CHECK(std::abs(d.eigenvectors(2, 0) + d.eigenvectors(3, 0)) < 1e-8);
  CHECK(std::abs(d.eigenvectors(4, 0) - d.eigenvectors(5, 0)) < 1e-8);
  const double x1_sim =
      std::sqrt(std::norm(d.eigenvectors(2, 0)) + std::norm(d.eigenvectors(3, 0)));
  CHECK(x1_sim == doctest::Approx(std::abs(cf.x1)).epsilon(1e-9));
}

TEST_CASE("after uncomputation the clock is |00> and residual tangles vanish") {
  for (double b0_sq : {0.2, 0.6, 1.0}) {
    const HhlProblem p = problem_from_fraction(b0_sq);
    const HhlStageStates sim = hhl_run(p);
    // psi3 lives entirely on clock |00>
    double outside = 0.0;
    for (int i = 4; i < 16; ++i) outside += std::norm(sim.psi3[i]);
    CHECK(outside < 1e-20);
    const EntanglementRecord rec = analyze_three_qubit(sim.rho3_bar);
    REQUIRE(rec.three_tangle.has_value());
    CHECK(*rec.three_tangle == doctest::Approx(0.0));
    CHECK(pi_tangle(sim.rho3_bar) == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("stage tangles never increase along the pipeline") {
  for (int i = 0; i <= 20; ++i) {
    const HhlProblem p = problem_from_fraction(i / 20.0);
    const ClosedFormTangles t = closed_form_tangles(p);
    CHECK(t.tau3_psi1 >= t.tau3_rho2 - 1e-9);
    CHECK(t.tau3_rho2 >= t.tau3_rho3 - 1e-9);
    CHECK(t.pi3_psi1 >= t.pi3_rho2 - 1e-9);
    CHECK(t.pi3_rho2 >= t.pi3_rho3 - 1e-9);
  }
  // endpoints carry a full unit of tangle into stage one
  CHECK(closed_form_tangles(problem_from_fraction(1.0)).tau3_psi1 ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(closed_form_tangles(problem_from_fraction(0.0)).pi3_psi1 ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pairwise concurrences vanish at every stage") {
  const HhlProblem p = problem_from_fraction(0.7);
  const HhlStageStates sim = hhl_run(p);
  for (const EntanglementRecord& rec :
       {analyze_three_qubit(sim.psi1_bar), analyze_three_qubit(sim.rho2_bar),
        analyze_three_qubit(sim.rho3_bar)}) {
    CHECK(rec.concurrence_ab < 1e-9);
    CHECK(rec.concurrence_ac < 1e-9);
    CHECK(rec.concurrence_bc < 1e-9);
  }
}

TEST_CASE("cross validation passes on representative inputs") {
  for (double b0_sq : {0.0, 0.5, 0.9}) {
    const std::vector<CheckResult> checks = cross_validate(problem_from_fraction(b0_sq));
    REQUIRE(checks.size() == 5);
    for (const CheckResult& c : checks) {
      INFO(c.name, " discrepancy ", c.discrepancy);
      CHECK(c.pass);
      CHECK(c.discrepancy <= c.tolerance);
    }
  }
}

TEST_CASE("cross validation flags a mismatched closed-form parameterization") {
  const HhlProblem sim_p = problem_from_fraction(0.9);  // default rotation constant
  const HhlProblem wrong(sim_p.b0, sim_p.b1, 0.9);
  const std::vector<CheckResult> checks = cross_validate(sim_p, wrong);
  bool any_failed = false;
  for (const CheckResult& c : checks) any_failed = any_failed || !c.pass;
  CHECK(any_failed);
}
