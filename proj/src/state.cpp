// SPDX-License-Identifier: MIT
#include "qtangle/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qtangle {

namespace {
constexpr double kNormTolerance = 1e-10;

int qubits_for_dim(size_t dim) {
  if (dim == 0) throw std::invalid_argument("state must have at least one amplitude");
  int n = 0;
  size_t d = dim;
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument("amplitude count must be a power of two");
    d /= 2;
    ++n;
  }
  return n;
}
}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 20) throw std::invalid_argument("unsupported qubit count");
  amps_.assign(size_t{1} << num_qubits, cd(0.0, 0.0));
  amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<cd> amplitudes) {
  if (num_qubits < 0 || num_qubits > 20) throw std::invalid_argument("unsupported qubit count");
  if (amplitudes.size() != (size_t{1} << num_qubits))
    throw std::invalid_argument("amplitude count does not match qubit count");
  num_qubits_ = num_qubits;
  amps_ = std::move(amplitudes);
  if (std::abs(norm() - 1.0) > kNormTolerance)
    throw std::invalid_argument("state vector must be normalized");
}

StateVector StateVector::from_amplitudes(std::vector<cd> amplitudes) {
  int n = qubits_for_dim(amplitudes.size());
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int num_qubits, int index) {
  StateVector s(num_qubits);
  if (index < 0 || index >= s.dim()) throw std::invalid_argument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cd& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

cd StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("inner product dimension mismatch");
  cd s = 0.0;
  for (int i = 0; i < dim(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

double StateVector::probability(int basis_index) const {
  if (basis_index < 0 || basis_index >= dim())
    throw std::invalid_argument("basis index out of range");
  return std::norm(amps_[basis_index]);
}

StateVector kron(const StateVector& a, const StateVector& b) {
  std::vector<cd> out;
  out.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) out.push_back(a[i] * b[j]);
  return StateVector(a.num_qubits() + b.num_qubits(), std::move(out));
}

StateVector phase_align(const StateVector& reference, const StateVector& s) {
  cd overlap = reference.inner(s);
  cd phase = (std::abs(overlap) > 1e-300) ? std::conj(overlap) / std::abs(overlap) : cd(1.0);
  std::vector<cd> amps = s.amplitudes();
  for (cd& a : amps) a *= phase;
  return StateVector(s.num_qubits(), std::move(amps));
}

double phase_aligned_linf(const StateVector& reference, const StateVector& s) {
  StateVector aligned = phase_align(reference, s);
  double m = 0.0;
  for (int i = 0; i < s.dim(); ++i) m = std::max(m, std::abs(aligned[i] - reference[i]));
  return m;
}

}  // namespace qtangle
