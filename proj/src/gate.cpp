// SPDX-License-Identifier: MIT
#include "qtangle/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qtangle/eig.hpp"

namespace qtangle {

int Gate::arity() const {
  int rows = matrix.rows();
  int k = 0;
  while ((1 << k) < rows) ++k;
  if ((1 << k) != rows || !matrix.is_square())
    throw std::logic_error("gate matrix must be square with power-of-two size");
  return k;
}

Gate Gate::adjoint() const { return Gate{name + "_dag", matrix.adjoint()}; }

namespace gates {

Gate x() { return {"x", ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}}; }
Gate y() { return {"y", ComplexMatrix{{0.0, cd(0.0, -1.0)}, {cd(0.0, 1.0), 0.0}}}; }
Gate z() { return {"z", ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}}; }

Gate h() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {"h", ComplexMatrix{{r, r}, {r, -r}}};
}

Gate ry(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {"ry", ComplexMatrix{{c, -s}, {s, c}}};
}

Gate phase(double phi) {
  return {"phase", ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, phi)}}};
}

Gate controlled_phase(double phi) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(3, 3) = std::polar(1.0, phi);
  return {"cphase", m};
}

Gate swap() {
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return {"swap", m};
}

Gate phase_flip_oracle(int n, int target) {
  if (n < 1 || n > 10) throw std::invalid_argument("oracle register size out of range");
  const int dim = 1 << n;
  if (target < 0 || target >= dim) throw std::invalid_argument("oracle target out of range");
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m(target, target) = -1.0;
  return {"oracle", m};
}

Gate diffuser(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("diffuser register size out of range");
  const int dim = 1 << n;
  ComplexMatrix m(dim, dim);
  const double two_over_n = 2.0 / dim;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = two_over_n - (r == c ? 1.0 : 0.0);
  return {"diffuser", m};
}

Gate gate_power(const Gate& u, int power) {
  if (power < 0) throw std::invalid_argument("gate power must be non-negative");
  ComplexMatrix result = ComplexMatrix::identity(u.matrix.rows());
  for (int i = 0; i < power; ++i) result = result * u.matrix;
  return {u.name + "^" + std::to_string(power), result};
}

Gate controlled_on_value(const Gate& u, int num_controls, int value) {
  if (num_controls < 1) throw std::invalid_argument("need at least one control qubit");
  if (value < 0 || value >= (1 << num_controls))
    throw std::invalid_argument("control value out of range");
  const int du = u.matrix.rows();
  const int dim = (1 << num_controls) * du;
  ComplexMatrix m = ComplexMatrix::identity(dim);
  const int offset = value * du;
  for (int r = 0; r < du; ++r)
    for (int c = 0; c < du; ++c) m(offset + r, offset + c) = u.matrix(r, c);
  return {"c[" + std::to_string(value) + "]" + u.name, m};
}

}  // namespace gates

Gate hamiltonian_evolution(const ComplexMatrix& a, double t) {
  if (!a.is_square() || !a.is_hermitian(1e-10))
    throw std::invalid_argument("hermitian required");
  SpectralDecomposition d = hermitian_eig(a);
  const int n = a.rows();
  ComplexMatrix u(n, n);
  for (int j = 0; j < n; ++j) {
    const cd phase = std::polar(1.0, d.eigenvalues[j] * t);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        u(r, c) += phase * d.eigenvectors(r, j) * std::conj(d.eigenvectors(c, j));
  }
  return {"exp(+iAt)", u};
}

}  // namespace qtangle
