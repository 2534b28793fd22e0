// SPDX-License-Identifier: MIT
// Pure quantum states on qubit registers.
#pragma once

#include <vector>

#include "qtangle/matrix.hpp"

namespace qtangle {

// Qubit indexing convention used by the whole library: qubit 0 is the MOST
// significant bit of a computational-basis index. For an n-qubit register the
// basis state |q0 q1 ... q_{n-1}> has index sum_k q_k * 2^(n-1-k).
inline int bit_shift(int num_qubits, int qubit) { return num_qubits - 1 - qubit; }
inline int bit_of(int basis_index, int qubit, int num_qubits) {
  return (basis_index >> bit_shift(num_qubits, qubit)) & 1;
}
inline int flip_bit(int basis_index, int qubit, int num_qubits) {
  return basis_index ^ (1 << bit_shift(num_qubits, qubit));
}

class StateVector {
public:
  // |0...0> on num_qubits qubits.
  explicit StateVector(int num_qubits);
  // Validates the amplitude count is 2^num_qubits and the norm is 1 within
  // 1e-10; throws std::invalid_argument otherwise.
  StateVector(int num_qubits, std::vector<cd> amplitudes);
  // Infers the qubit count from the amplitude count (must be a power of two).
  static StateVector from_amplitudes(std::vector<cd> amplitudes);
  // Computational-basis state |index> on num_qubits qubits.
  static StateVector basis(int num_qubits, int index);

  int num_qubits() const { return num_qubits_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  cd& operator[](int i) { return amps_[i]; }
  const cd& operator[](int i) const { return amps_[i]; }
  const std::vector<cd>& amplitudes() const { return amps_; }

  double norm() const;
  // <this|other>
  cd inner(const StateVector& other) const;
  double probability(int basis_index) const;

private:
  StateVector() = default;
  int num_qubits_ = 0;
  std::vector<cd> amps_;
};

StateVector kron(const StateVector& a, const StateVector& b);

// Multiplies s by the global phase that maximizes Re<reference|s'>, i.e. the
// phase making <reference|s'> real and non-negative.
StateVector phase_align(const StateVector& reference, const StateVector& s);

// min over global phase of the max-abs amplitude difference.
double phase_aligned_linf(const StateVector& reference, const StateVector& s);

}  // namespace qtangle
