// SPDX-License-Identifier: MIT
#include "qtangle/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtangle {

StateVector apply(const StateVector& s, const Gate& g, const std::vector<int>& targets) {
  const int n = s.num_qubits();
  const int k = g.arity();
  if (static_cast<int>(targets.size()) != k)
    throw std::invalid_argument("target count does not match gate arity");
  int mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n) throw std::invalid_argument("target qubit out of range");
    const int bit = 1 << bit_shift(n, t);
    if (mask & bit) throw std::invalid_argument("duplicate target qubit");
    mask |= bit;
  }
  if (!g.matrix.is_unitary(1e-10)) throw std::invalid_argument("gate must be unitary");

  std::vector<int> shifts(k);
  for (int j = 0; j < k; ++j) shifts[j] = 1 << bit_shift(n, targets[j]);

  const int dim = s.dim();
  const int sub = 1 << k;
  std::vector<cd> out(dim);
  std::vector<int> idx(sub);
  for (int base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (int a = 0; a < sub; ++a) {
      int full = base;
      for (int j = 0; j < k; ++j)
        if ((a >> (k - 1 - j)) & 1) full |= shifts[j];
      idx[a] = full;
    }
    for (int a = 0; a < sub; ++a) {
      cd acc = 0.0;
      for (int b = 0; b < sub; ++b) {
        const cd& u = g.matrix(a, b);
        if (u != cd(0.0)) acc += u * s[idx[b]];
      }
      out[idx[a]] = acc;
    }
  }
  return StateVector(n, std::move(out));
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 20) throw std::invalid_argument("unsupported qubit count");
}

void Circuit::add(Gate g, std::vector<int> targets) {
  const int k = g.arity();
  if (static_cast<int>(targets.size()) != k)
    throw std::invalid_argument("target count does not match gate arity");
  std::vector<int> seen;
  for (int t : targets) {
    if (t < 0 || t >= num_qubits_) throw std::invalid_argument("target qubit out of range");
    if (std::find(seen.begin(), seen.end(), t) != seen.end())
      throw std::invalid_argument("duplicate target qubit");
    seen.push_back(t);
  }
  CircuitStep step;
  step.kind = CircuitStep::Kind::gate;
  step.gate = std::move(g);
  step.targets = std::move(targets);
  steps_.push_back(std::move(step));
}

void Circuit::add(const GateOnQubits& g) { add(g.gate, g.qubits); }

void Circuit::add_marker(std::string label) {
  CircuitStep step;
  step.kind = CircuitStep::Kind::marker;
  step.label = std::move(label);
  steps_.push_back(std::move(step));
}

void Circuit::append(const Circuit& other) {
  std::vector<int> id_map(other.num_qubits());
  for (size_t i = 0; i < id_map.size(); ++i) id_map[i] = static_cast<int>(i);
  append(other, id_map);
}

void Circuit::append(const Circuit& other, const std::vector<int>& qubit_map) {
  if (static_cast<int>(qubit_map.size()) != other.num_qubits())
    throw std::invalid_argument("qubit map size does not match the appended circuit");
  for (int q : qubit_map)
    if (q < 0 || q >= num_qubits_) throw std::invalid_argument("qubit map entry out of range");
  for (const CircuitStep& step : other.steps()) {
    if (step.kind == CircuitStep::Kind::marker) {
      add_marker(step.label);
      continue;
    }
    std::vector<int> mapped;
    mapped.reserve(step.targets.size());
    for (int t : step.targets) mapped.push_back(qubit_map[t]);
    add(step.gate, std::move(mapped));
  }
}

Circuit Circuit::inverse() const {
  Circuit inv(num_qubits_);
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (it->kind == CircuitStep::Kind::marker) continue;
    inv.add(it->gate.adjoint(), it->targets);
  }
  return inv;
}

const StateVector& StageTrace::at(const std::string& label) const {
  for (const Stage& s : stages)
    if (s.label == label) return s.state;
  throw std::invalid_argument("no stage labeled '" + label + "'");
}

StageTrace run(const Circuit& c, const StateVector& initial) {
  if (initial.num_qubits() != c.num_qubits())
    throw std::invalid_argument("initial state size does not match the circuit");
  StageTrace trace;
  trace.stages.push_back({"initial", initial});
  StateVector state = initial;
  for (const CircuitStep& step : c.steps()) {
    if (step.kind == CircuitStep::Kind::marker) {
      trace.stages.push_back({step.label, state});
    } else {
      state = apply(state, step.gate, step.targets);
    }
  }
  if (!c.empty()) trace.stages.push_back({"final", state});
  return trace;
}

Circuit qft(int n, bool inverse) {
  if (n < 1 || n > 12) throw std::invalid_argument("unsupported register size");
  Circuit c(n);
  for (int q = 0; q < n; ++q) {
    c.add(gates::h(), {q});
    for (int m = q + 1; m < n; ++m) {
      const double phi = 2.0 * std::numbers::pi / std::pow(2.0, m - q + 1);
      c.add(gates::controlled_phase(phi), {m, q});
    }
  }
  for (int q = 0; q < n / 2; ++q) c.add(gates::swap(), {q, n - 1 - q});
  return inverse ? c.inverse() : c;
}

GateOnQubits controlled_power(const Gate& u, int power, int control,
                              const std::vector<int>& targets) {
  for (int t : targets)
    if (t == control) throw std::invalid_argument("control qubit cannot also be a target");
  Gate g = gates::controlled_on_value(gates::gate_power(u, power), 1, 1);
  std::vector<int> qubits;
  qubits.reserve(targets.size() + 1);
  qubits.push_back(control);
  qubits.insert(qubits.end(), targets.begin(), targets.end());
  return {std::move(g), std::move(qubits)};
}

}  // namespace qtangle
