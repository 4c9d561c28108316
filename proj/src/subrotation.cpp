// Copyright 2026 The numix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numix/subrotation.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "numix/errors.hpp"
#include "numix/permutation.hpp"

namespace numix {

namespace {

std::vector<Qubit> qubit_range(Qubit first, Qubit last) {
  std::vector<Qubit> qs(last - first);
  std::iota(qs.begin(), qs.end(), first);
  return qs;
}

// U3(-2 theta, delta, -delta) anticontrolled on q0, target q1.
Gate two_qubit_base(double theta, double delta) {
  return Gate::u3(-2 * theta, delta, -delta, 1, {}, {0});
}

}  // namespace

void SubRotation::validate() const {
  Transposition{i, j, n_qubits}.validate();
}

Matrix2 subrotation_block(double theta, double delta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix2 m;
  m << c, s * std::polar(1.0, -delta), -s * std::polar(1.0, delta), c;
  return m;
}

Circuit base_subrotation(double theta, double delta, std::size_t n_qubits) {
  Circuit out(n_qubits);
  if (n_qubits == 1) {
    out.append(Gate::u3(-2 * theta, delta, -delta, 0));
    return out;
  }
  if (n_qubits == 2) {
    out.append(two_qubit_base(theta, delta));
    return out;
  }
  // Between the X layers this is the controlled-V^2 identity with
  // V = U3(theta, -delta, delta): V^2 lands on the last qubit exactly when
  // q0..q_{n-2} are all 1. The X layers turn those controls into
  // anticontrols and conjugate V^2 by X, which yields the R^{12} block.
  const Qubit last = n_qubits - 1;
  const Qubit pivot = n_qubits - 2;
  const std::vector<Qubit> upper = qubit_range(0, pivot);
  for (Qubit q = 0; q < n_qubits; ++q) out.append(Gate::x(q));
  out.append(Gate::u3(theta, -delta, delta, last, {pivot}));
  out.append(Gate::x(pivot, upper));
  out.append(Gate::u3(-theta, -delta, delta, last, {pivot}));
  out.append(Gate::x(pivot, upper));
  out.append(Gate::u3(theta, -delta, delta, last, upper));
  for (Qubit q = 0; q < n_qubits; ++q) out.append(Gate::x(q));
  return out;
}

Circuit base_subrotation_cp0(double theta, std::size_t n_qubits) {
  if (n_qubits < 2) {
    throw UnsupportedError("CP-conserving base sub-rotation needs n >= 2");
  }
  const Qubit last = n_qubits - 1;
  const std::vector<Qubit> upper = qubit_range(0, last);
  Circuit out(n_qubits);
  // Controls satisfied: Ry(-t/2) X Ry(t) X Ry(-t/2) = Ry(-2t).
  // Otherwise: Ry(-t/2) Ry(t) Ry(-t/2) = I.
  for (Qubit q : upper) out.append(Gate::x(q));
  out.append(Gate::u3(-theta / 2, 0, 0, last));
  out.append(Gate::x(last, upper));
  out.append(Gate::u3(theta, 0, 0, last));
  out.append(Gate::x(last, upper));
  for (Qubit q : upper) out.append(Gate::x(q));
  out.append(Gate::u3(-theta / 2, 0, 0, last));
  return out;
}

Circuit subrotation(const SubRotation& s) {
  s.validate();
  const Circuit base = (s.delta == 0.0 && s.n_qubits >= 3)
                           ? base_subrotation_cp0(s.theta, s.n_qubits)
                           : base_subrotation(s.theta, s.delta, s.n_qubits);
  if (s.i == 1 && s.j == 2) return base;

  // R^{ij} = P R^{12} P^{-1} with P = (i 1)(j 2). In time order P^{-1}
  // applies (i 1) first, then (j 2).
  const Circuit to_i = transposition_circuit(s.i, 1, s.n_qubits);
  const Circuit to_j = transposition_circuit(s.j, 2, s.n_qubits);
  Circuit out(s.n_qubits);
  out.append(to_i);
  out.append(to_j);
  out.append(base);
  out.append(to_j);
  out.append(to_i);
  return out;
}

Circuit subrotation_2q_closed_form(const SubRotation& s) {
  if (s.n_qubits != 2) {
    throw UnsupportedError("closed-form sub-rotations exist only for n = 2");
  }
  s.validate();
  const Gate base = two_qubit_base(s.theta, s.delta);
  const Gate swap = Gate::swap(0, 1);
  Circuit out(2);
  switch (s.i * 10 + s.j) {
    case 12:
      out.append(base);
      break;
    case 13:
      out.append(swap).append(base).append(swap);
      break;
    case 14:
      // (2 4) is CX with control q1 on q0; it commutes past the rest.
      out.append(Gate::x(0, {1})).append(base).append(Gate::x(0, {1}));
      break;
    case 23: {
      const Gate flip12 = Gate::x(1, {}, {0});
      out.append(flip12).append(swap).append(base).append(swap).append(flip12);
      break;
    }
    case 24:
      out.append(Gate::x(1)).append(swap).append(base).append(swap).append(
          Gate::x(1));
      break;
    case 34:
      out.append(Gate::x(0)).append(base).append(Gate::x(0));
      break;
    default:
      throw StructuralError("no closed form for R^" + std::to_string(s.i) +
                            std::to_string(s.j));
  }
  return out;
}

}  // namespace numix
