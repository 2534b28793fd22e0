// SPDX-License-Identifier: MIT
// Dense complex matrices sized for few-qubit linear algebra (dimension <= 64).
#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace qtangle {

using cd = std::complex<double>;

class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<cd>> rows);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_ && rows_ > 0; }

  cd& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const cd& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cd trace() const;
  double frobenius_norm() const;
  double max_abs() const;  // largest |entry|

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;
  bool is_psd(double tol) const;  // Hermitian with all eigenvalues >= -tol

  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cd s) const;

  const std::vector<cd>& data() const { return data_; }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cd> data_;
};

// Kronecker product. The first factor owns the most significant block of the
// composite row/column index (big-endian composition, matching the qubit
// ordering used throughout the library).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qtangle
