// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qtangle/circuit.hpp"
#include "qtangle/eig.hpp"
#include "qtangle/gate.hpp"
#include "test_helpers.hpp"

using namespace qtangle;
using qtest::max_diff;

namespace {

ComplexMatrix dft_matrix(int n) {
  const int dim = 1 << n;
  ComplexMatrix f(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      f(r, c) = std::polar(scale, 2.0 * std::numbers::pi * r * c / dim);
  return f;
}

ComplexMatrix circuit_matrix(const Circuit& c) {
  const int dim = 1 << c.num_qubits();
  ComplexMatrix m(dim, dim);
  for (int col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(c.num_qubits(), col);
    for (const CircuitStep& step : c.steps())
      if (step.kind == CircuitStep::Kind::gate) s = apply(s, step.gate, step.targets);
    for (int row = 0; row < dim; ++row) m(row, col) = s[row];
  }
  return m;
}

}  // namespace

TEST_CASE("apply acts on the most significant qubit first") {
  const StateVector s0(2);  // |00>
  const StateVector after = apply(s0, gates::x(), {0});
  CHECK(after.probability(2) == doctest::Approx(1.0));  // |10>
  const StateVector after1 = apply(s0, gates::x(), {1});
  CHECK(after1.probability(1) == doctest::Approx(1.0));  // |01>
}

TEST_CASE("apply validates targets and unitarity") {
  const StateVector s(2);
  CHECK_THROWS_AS(apply(s, gates::h(), {2}), std::invalid_argument);
  CHECK_THROWS_AS(apply(s, gates::swap(), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(apply(s, gates::h(), {0, 1}), std::invalid_argument);
  Gate bad{"bad", ComplexMatrix{{1.0, 0.0}, {0.0, 2.0}}};
  CHECK_THROWS_AS(apply(s, bad, {0}), std::invalid_argument);
}

TEST_CASE("two-qubit phase oracle flips exactly the marked amplitude") {
  StateVector s(2);
  s = apply(s, gates::h(), {0});
  s = apply(s, gates::h(), {1});
  s = apply(s, gates::phase_flip_oracle(2, 3), {0, 1});
  CHECK(s[0].real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s[1].real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s[2].real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s[3].real() == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("diffuser reflects about the uniform superposition") {
  // applying the diffuser to |s> must return |s>
  StateVector s(2);
  s = apply(s, gates::h(), {0});
  s = apply(s, gates::h(), {1});
  const StateVector reflected = apply(s, gates::diffuser(2), {0, 1});
  CHECK(phase_aligned_linf(s, reflected) < 1e-14);
  CHECK(gates::diffuser(3).matrix.is_unitary(1e-12));
}

TEST_CASE("standard gates are unitary") {
  for (const Gate& g :
       {gates::x(), gates::y(), gates::z(), gates::h(), gates::ry(0.8), gates::phase(2.2),
        gates::controlled_phase(1.3), gates::swap(), gates::phase_flip_oracle(3, 6),
        gates::diffuser(4), gates::controlled_on_value(gates::ry(0.33), 2, 2)})
    CHECK(g.matrix.is_unitary(1e-12));
}

TEST_CASE("hamiltonian evolution uses the +i sign convention") {
  const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
  const Gate u = hamiltonian_evolution(z, 0.7);
  CHECK(std::abs(u.matrix(0, 0) - std::polar(1.0, 0.7)) < 1e-14);
  CHECK(std::abs(u.matrix(1, 1) - std::polar(1.0, -0.7)) < 1e-14);
  CHECK(std::abs(u.matrix(0, 1)) < 1e-14);
  CHECK_THROWS_AS(hamiltonian_evolution(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("gate powers multiply out") {
  const Gate x2 = gates::gate_power(gates::x(), 2);
  CHECK(max_diff(x2.matrix, ComplexMatrix::identity(2)) < 1e-15);
  const Gate x0 = gates::gate_power(gates::x(), 0);
  CHECK(max_diff(x0.matrix, ComplexMatrix::identity(2)) < 1e-15);
  CHECK_THROWS_AS(gates::gate_power(gates::x(), -1), std::invalid_argument);
}

TEST_CASE("controlled_on_value applies the block at the encoded value only") {
  const Gate g = gates::controlled_on_value(gates::x(), 2, 2);
  StateVector s = StateVector::basis(3, 0b100);  // controls read 2
  s = apply(s, g, {0, 1, 2});
  CHECK(s.probability(0b101) == doctest::Approx(1.0));
  StateVector t = StateVector::basis(3, 0b010);  // controls read 1: identity
  t = apply(t, g, {0, 1, 2});
  CHECK(t.probability(0b010) == doctest::Approx(1.0));
}

TEST_CASE("controlled_power raises the unitary and rejects overlapping wires") {
  const GateOnQubits cp = controlled_power(gates::x(), 2, 0, {1});
  StateVector s = StateVector::basis(2, 0b10);
  s = apply(s, cp.gate, cp.qubits);
  CHECK(s.probability(0b10) == doctest::Approx(1.0));  // X^2 = identity
  const GateOnQubits cp1 = controlled_power(gates::x(), 1, 0, {1});
  StateVector t = StateVector::basis(2, 0b10);
  t = apply(t, cp1.gate, cp1.qubits);
  CHECK(t.probability(0b11) == doctest::Approx(1.0));
  CHECK_THROWS_AS(controlled_power(gates::x(), 1, 0, {0}), std::invalid_argument);
}

TEST_CASE("qft matches the dense Fourier matrix") {
  for (int n : {1, 2, 3}) {
    CHECK(max_diff(circuit_matrix(qft(n)), dft_matrix(n)) < 1e-13);
    const ComplexMatrix inv = circuit_matrix(qft(n, true));
    CHECK(max_diff(inv, dft_matrix(n).adjoint()) < 1e-13);
  }
}

TEST_CASE("qft on basis states produces uniform magnitudes with expected phases") {
  StateVector s(2);
  const StageTrace trace = run(qft(2), s);
  for (int i = 0; i < 4; ++i)
    CHECK(trace.final_state().probability(i) == doctest::Approx(0.25).epsilon(1e-12));
  // |01> picks up quarter-turn phases: amplitudes (1, i, -1, -i)/2
  const StageTrace t2 = run(qft(2), StateVector::basis(2, 1));
  const StateVector& f = t2.final_state();
  CHECK(std::abs(f[0] - cd(0.5)) < 1e-13);
  CHECK(std::abs(f[1] - cd(0.0, 0.5)) < 1e-13);
  CHECK(std::abs(f[2] - cd(-0.5)) < 1e-13);
  CHECK(std::abs(f[3] - cd(0.0, -0.5)) < 1e-13);
}

TEST_CASE("run records the initial state, markers in order, and the final state") {
  Circuit c(1);
  c.add(gates::h(), {0});
  c.add_marker("after-h");
  c.add(gates::h(), {0});
  const StageTrace trace = run(c, StateVector(1));
  REQUIRE(trace.stages.size() == 3);
  CHECK(trace.stages[0].label == "initial");
  CHECK(trace.stages[1].label == "after-h");
  CHECK(trace.stages[2].label == "final");
  CHECK(trace.at("after-h").probability(0) == doctest::Approx(0.5));
  CHECK(trace.final_state().probability(0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(trace.at("missing"), std::invalid_argument);
}

TEST_CASE("running an empty circuit yields a trace with only the initial state") {
  const Circuit c(2);
  const StageTrace trace = run(c, StateVector(2));
  REQUIRE(trace.stages.size() == 1);
  CHECK(trace.stages[0].label == "initial");
}

TEST_CASE("circuit inverse reverses gates, conjugates them, and drops markers") {
  Circuit c(2);
  c.add(gates::h(), {0});
  c.add_marker("mid");
  c.add(gates::controlled_phase(0.9), {0, 1});
  Circuit round_trip(2);
  round_trip.append(c);
  round_trip.append(c.inverse());
  const StateVector start = qtest::bell_phi_plus();
  const StageTrace trace = run(round_trip, start);
  CHECK(phase_aligned_linf(start, trace.final_state()) < 1e-13);
  const Circuit inv = c.inverse();
  for (const CircuitStep& step : inv.steps())
    CHECK(step.kind == CircuitStep::Kind::gate);
}

TEST_CASE("append with a qubit map embeds a circuit on selected wires") {
  Circuit big(3);
  big.append(qft(2), {1, 2});  // act on the low two qubits
  const StateVector in = StateVector::basis(3, 0b101);
  const StateVector direct = run(big, in).final_state();
  // same operation computed on the 2-qubit subspace
  const StateVector sub = run(qft(2), StateVector::basis(2, 0b01)).final_state();
  for (int i = 0; i < 4; ++i) CHECK(std::abs(direct[0b100 + i] - sub[i]) < 1e-13);
  CHECK_THROWS_AS(big.append(qft(2), {0}), std::invalid_argument);
  CHECK_THROWS_AS(big.append(qft(2), {0, 5}), std::invalid_argument);
}

TEST_CASE("circuits preserve the norm") {
  StateVector s = qtest::ghz();
  for (int step = 0; step < 30; ++step) {
    s = apply(s, gates::h(), {step % 3});
    s = apply(s, gates::controlled_phase(0.1 * step), {step % 3, (step + 1) % 3});
  }
  CHECK(std::abs(s.norm() - 1.0) < 1e-13);
}
