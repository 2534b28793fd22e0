// SPDX-License-Identifier: MIT
#include "qtangle/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qtangle/eig.hpp"

namespace qtangle {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  data_.assign(static_cast<size_t>(rows) * cols, cd(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cd>> rows) {
  rows_ = static_cast<int>(rows.size());
  if (rows_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  cols_ = static_cast<int>(rows.begin()->size());
  if (cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

cd ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace requires a square matrix");
  cd t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cd& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cd& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  ComplexMatrix prod = adjoint() * (*this);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      cd expect = (r == c) ? cd(1.0) : cd(0.0);
      if (std::abs(prod(r, c) - expect) > tol) return false;
    }
  return true;
}

bool ComplexMatrix::is_psd(double tol) const {
  if (!is_hermitian(tol)) return false;
  SpectralDecomposition d = hermitian_eig(*this);
  return d.eigenvalues.empty() || d.eigenvalues.back() >= -tol;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  ComplexMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      cd a = (*this)(r, k);
      if (a == cd(0.0)) continue;
      for (int c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  ComplexMatrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference dimension mismatch");
  ComplexMatrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(cd s) const {
  ComplexMatrix out = *this;
  for (cd& v : out.data_) v *= s;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      cd av = a(ar, ac);
      if (av == cd(0.0)) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = av * b(br, bc);
    }
  return out;
}

}  // namespace qtangle
