// SPDX-License-Identifier: MIT
// Deterministic Hermitian eigensolver (cyclic Jacobi) and trace norm.
#pragma once

#include <vector>

#include "qtangle/matrix.hpp"

namespace qtangle {

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // column i pairs with eigenvalues[i]

  // Number of eigenvalues strictly greater than tol.
  int rank(double tol = 1e-9) const;
  // sum_i eigenvalues[i] * v_i v_i^dagger
  ComplexMatrix reconstruct() const;
};

// Diagonalizes a complex Hermitian matrix with cyclic Jacobi rotations.
// Deterministic for identical input: fixed sweep order, eigenvalues sorted
// descending (index order breaks ties), and each eigenvector's largest
// component is made real and positive. Throws std::invalid_argument
// ("hermitian required") for non-square or non-Hermitian input.
SpectralDecomposition hermitian_eig(const ComplexMatrix& h);

// Sum of absolute eigenvalues of a Hermitian matrix. Throws for non-square
// input; non-Hermitian square input is rejected by the eigensolver.
double trace_norm(const ComplexMatrix& m);

}  // namespace qtangle
