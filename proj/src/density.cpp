// SPDX-License-Identifier: MIT
#include "qtangle/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qtangle/eig.hpp"

namespace qtangle {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;

std::vector<int> strides_for(const std::vector<int>& dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
    strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

std::vector<int> decode(int index, const std::vector<int>& dims, const std::vector<int>& strides) {
  std::vector<int> digits(dims.size());
  for (size_t k = 0; k < dims.size(); ++k) {
    digits[k] = index / strides[k];
    index %= strides[k];
  }
  return digits;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, std::vector<int> subsystem_dims)
    : m_(std::move(m)), dims_(std::move(subsystem_dims)) {
  if (!m_.is_square()) throw std::invalid_argument("density matrix must be square");
  if (dims_.empty()) throw std::invalid_argument("density matrix needs at least one subsystem");
  long long prod = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("subsystem dimensions must be positive");
    prod *= d;
  }
  if (prod != m_.rows())
    throw std::invalid_argument("subsystem dimensions do not match the matrix size");
  for (int r = 0; r < m_.rows(); ++r)
    for (int c = r; c < m_.cols(); ++c)
      if (std::abs(m_(r, c) - std::conj(m_(c, r))) > kHermitianTol)
        throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(m_.trace() - cd(1.0)) > kTraceTol)
    throw std::invalid_argument("density matrix must have unit trace");
  SpectralDecomposition d = hermitian_eig(m_);
  if (d.eigenvalues.back() < kEigenvalueFloor)
    throw std::invalid_argument("density matrix must be positive semidefinite");
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  int d = psi.dim();
  ComplexMatrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  std::vector<int> dims(std::max(psi.num_qubits(), 1), 2);
  if (psi.num_qubits() == 0) dims = {1};
  return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& traced) {
  const auto& dims = rho.subsystem_dims();
  const int ns = rho.num_subsystems();
  std::vector<bool> is_traced(ns, false);
  for (int t : traced) {
    if (t < 0 || t >= ns) throw std::invalid_argument("subsystem out of range");
    if (is_traced[t]) throw std::invalid_argument("duplicate traced subsystem");
    is_traced[t] = true;
  }
  if (static_cast<int>(traced.size()) == ns)
    throw std::invalid_argument("cannot trace out every subsystem");

  std::vector<int> kept;
  std::vector<int> kept_dims, traced_dims;
  std::vector<int> traced_list;
  for (int k = 0; k < ns; ++k) {
    if (is_traced[k]) {
      traced_list.push_back(k);
      traced_dims.push_back(dims[k]);
    } else {
      kept.push_back(k);
      kept_dims.push_back(dims[k]);
    }
  }
  const std::vector<int> strides = strides_for(dims);
  const std::vector<int> kept_strides = strides_for(kept_dims);
  const std::vector<int> traced_strides = strides_for(traced_dims);
  const int dim_out = std::accumulate(kept_dims.begin(), kept_dims.end(), 1, std::multiplies<>());
  const int dim_tr =
      std::accumulate(traced_dims.begin(), traced_dims.end(), 1, std::multiplies<>());

  ComplexMatrix out(dim_out, dim_out);
  for (int r = 0; r < dim_out; ++r) {
    const std::vector<int> rd = decode(r, kept_dims, kept_strides);
    for (int c = 0; c < dim_out; ++c) {
      const std::vector<int> cdg = decode(c, kept_dims, kept_strides);
      cd sum = 0.0;
      for (int t = 0; t < dim_tr; ++t) {
        const std::vector<int> td = decode(t, traced_dims, traced_strides);
        int full_r = 0, full_c = 0;
        for (size_t k = 0; k < kept.size(); ++k) {
          full_r += rd[k] * strides[kept[k]];
          full_c += cdg[k] * strides[kept[k]];
        }
        for (size_t k = 0; k < traced_list.size(); ++k) {
          full_r += td[k] * strides[traced_list[k]];
          full_c += td[k] * strides[traced_list[k]];
        }
        sum += rho.matrix()(full_r, full_c);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out), std::move(kept_dims));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem) {
  const auto& dims = rho.subsystem_dims();
  if (subsystem < 0 || subsystem >= rho.num_subsystems())
    throw std::invalid_argument("subsystem out of range");
  const std::vector<int> strides = strides_for(dims);
  const int stride = strides[subsystem];
  const int d_sub = dims[subsystem];
  const int dim = rho.dim();

  ComplexMatrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const int dr = (r / stride) % d_sub;
    for (int c = 0; c < dim; ++c) {
      const int dc = (c / stride) % d_sub;
      const int r_swapped = r + (dc - dr) * stride;
      const int c_swapped = c + (dr - dc) * stride;
      out(r, c) = rho.matrix()(r_swapped, c_swapped);
    }
  }
  return out;
}

DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep) {
  const int n = psi.num_qubits();
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("subsystem out of range");
    if (kept[k]) throw std::invalid_argument("duplicate kept subsystem");
    kept[k] = true;
  }
  if (keep.empty()) throw std::invalid_argument("must keep at least one subsystem");
  std::vector<int> traced;
  for (int k = 0; k < n; ++k)
    if (!kept[k]) traced.push_back(k);
  DensityMatrix full = DensityMatrix::from_pure(psi);
  if (traced.empty()) return full;
  return partial_trace(full, traced);
}

}  // namespace qtangle
