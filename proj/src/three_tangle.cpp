// SPDX-License-Identifier: MIT
#include "qtangle/three_tangle.hpp"

#include <cmath>
#include <stdexcept>

namespace qtangle {

double three_tangle_raw(const std::vector<cd>& a) {
  if (a.size() != 8) throw std::invalid_argument("three-tangle requires eight amplitudes");
  // Basis order |q0 q1 q2>: a[0]=a000, a[1]=a001, ..., a[7]=a111.
  const cd &a000 = a[0], &a001 = a[1], &a010 = a[2], &a011 = a[3];
  const cd &a100 = a[4], &a101 = a[5], &a110 = a[6], &a111 = a[7];

  const cd d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
  const cd d2 = a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 +
                a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010 +
                a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
  const cd d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;

  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double three_tangle(const StateVector& psi) {
  if (psi.num_qubits() != 3) throw std::invalid_argument("three-tangle requires three qubits");
  return three_tangle_raw(psi.amplitudes());
}

}  // namespace qtangle
