// SPDX-License-Identifier: MIT
// Gate-list circuits, stage snapshots, and common circuit builders.
#pragma once

#include <string>
#include <vector>

#include "qtangle/gate.hpp"
#include "qtangle/state.hpp"

namespace qtangle {

// Applies a k-qubit gate to the listed target qubits (order matters: the
// first target is the most significant local qubit). Validates target count,
// range, and distinctness.
StateVector apply(const StateVector& s, const Gate& g, const std::vector<int>& targets);

struct CircuitStep {
  enum class Kind { gate, marker };
  Kind kind = Kind::gate;
  Gate gate;                 // valid when kind == gate
  std::vector<int> targets;  // valid when kind == gate
  std::string label;         // valid when kind == marker
};

struct GateOnQubits {
  Gate gate;
  std::vector<int> qubits;
};

class Circuit {
public:
  explicit Circuit(int num_qubits);

  void add(Gate g, std::vector<int> targets);
  void add(const GateOnQubits& g);
  void add_marker(std::string label);
  // Appends another circuit's steps; qubit_map[i] gives the qubit this
  // circuit uses for the other circuit's qubit i.
  void append(const Circuit& other);
  void append(const Circuit& other, const std::vector<int>& qubit_map);
  // Reversed gate order with adjoint gates; markers are dropped.
  Circuit inverse() const;

  int num_qubits() const { return num_qubits_; }
  const std::vector<CircuitStep>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

private:
  int num_qubits_ = 0;
  std::vector<CircuitStep> steps_;
};

struct Stage {
  std::string label;
  StateVector state;
};

struct StageTrace {
  std::vector<Stage> stages;  // "initial", one per marker in order, "final"

  const StateVector& final_state() const { return stages.back().state; }
  // Throws std::invalid_argument when no stage carries the label.
  const StateVector& at(const std::string& label) const;
};

// Runs the circuit. The trace always starts with the initial state; each
// marker adds a snapshot; a "final" stage is appended for non-empty circuits.
StageTrace run(const Circuit& c, const StateVector& initial);

// Quantum Fourier transform on n qubits (big-endian register), built from
// Hadamards, controlled phases, and the closing qubit-reversal swaps.
Circuit qft(int n, bool inverse = false);

// Controlled u^power: `control` must not appear in `targets`.
GateOnQubits controlled_power(const Gate& u, int power, int control,
                              const std::vector<int>& targets);

}  // namespace qtangle
