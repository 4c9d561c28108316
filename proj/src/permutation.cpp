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

#include "numix/permutation.hpp"

#include <string>
#include <utility>

#include "numix/errors.hpp"

namespace numix {

void Transposition::validate() const {
  if (n_qubits == 0 || n_qubits > 20) {
    throw StructuralError("qubit count out of range");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (i < 1 || i >= j || j > dim) {
    throw StructuralError("invalid transposition (" + std::to_string(i) + " " +
                          std::to_string(j) + "; " + std::to_string(n_qubits) +
                          ")");
  }
}

Circuit adjacent_transposition(std::size_t i, std::size_t n_qubits) {
  Transposition{i, i + 1, n_qubits}.validate();
  Circuit out(n_qubits);
  if (n_qubits == 1) {
    out.append(Gate::x(0));
    return out;
  }
  const std::size_t half = std::size_t{1} << (n_qubits - 1);
  if (i < half) {
    // Class I
    return adjacent_transposition(i, n_qubits - 1)
        .shifted(1, n_qubits)
        .controlled(0, /*anti=*/true);
  }
  if (i > half) {
    // Class II
    return adjacent_transposition(i - half, n_qubits - 1)
        .shifted(1, n_qubits)
        .controlled(0);
  }
  // Class III. The inner transposition lives on q0..q_{n-2} and is
  // controlled by the last qubit.
  const Circuit outer = adjacent_transposition(half + 1, n_qubits);
  const std::size_t quarter = half / 2;
  Circuit inner =
      adjacent_transposition(quarter, n_qubits - 1)
          .shifted(0, n_qubits)
          .controlled(n_qubits - 1);
  out.append(outer);
  out.append(inner);
  out.append(outer);
  return out;
}

Circuit general_transposition(const Transposition& t) {
  t.validate();
  if (t.j == t.i + 1) return adjacent_transposition(t.i, t.n_qubits);
  // (i j) = (j-1 j)(i j-1)(j-1 j); every factor is self-inverse so the time
  // order of the outer pair is immaterial.
  const Circuit step = adjacent_transposition(t.j - 1, t.n_qubits);
  Circuit out(t.n_qubits);
  out.append(step);
  out.append(general_transposition({t.i, t.j - 1, t.n_qubits}));
  out.append(step);
  return out;
}

Circuit transposition_circuit(std::size_t i, std::size_t j,
                              std::size_t n_qubits) {
  if (i == j) {
    Circuit empty(n_qubits);
    if (i < 1 || i > empty.dim()) {
      throw StructuralError("basis state " + std::to_string(i) +
                            " out of range");
    }
    return empty;
  }
  if (i > j) std::swap(i, j);
  return general_transposition({i, j, n_qubits});
}

}  // namespace numix
