// SPDX-License-Identifier: MIT
// Density matrices over registers of (possibly mixed-dimension) subsystems.
#pragma once

#include <vector>

#include "qtangle/matrix.hpp"
#include "qtangle/state.hpp"

namespace qtangle {

class DensityMatrix {
public:
  // Validates: square matrix, product of subsystem_dims equals the dimension,
  // Hermitian within 1e-12, trace 1 within 1e-12, eigenvalues >= -1e-10.
  // Throws std::invalid_argument otherwise.
  DensityMatrix(ComplexMatrix m, std::vector<int> subsystem_dims);

  // |psi><psi| with one dimension-2 subsystem per qubit.
  static DensityMatrix from_pure(const StateVector& psi);

  const ComplexMatrix& matrix() const { return m_; }
  const std::vector<int>& subsystem_dims() const { return dims_; }
  int dim() const { return m_.rows(); }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }

private:
  ComplexMatrix m_;
  std::vector<int> dims_;
};

// Traces out the listed subsystems. Throws std::invalid_argument for an index
// out of range ("subsystem out of range"), a duplicate index, or when every
// subsystem would be traced out.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& traced);

// Transposes the indices of one subsystem. The result is Hermitian but in
// general not positive semidefinite, so it is returned as a plain matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem);

// rho = Tr_{complement(keep)} |psi><psi| over a qubit register.
DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep);

}  // namespace qtangle
