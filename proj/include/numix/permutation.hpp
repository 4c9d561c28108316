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

/**
 * @file permutation.hpp
 * @brief Circuits for basis-state transpositions (i j; n) built only from
 * multi-controlled X gates.
 *
 * Adjacent transpositions (i, i+1; n) fall into three classes by their
 * action on qubit 0:
 *   - i <  2^{n-1}: both states have q0 = 0. The circuit is the (n-1)-qubit
 *     transposition on q1..q_{n-1}, anticontrolled on q0.
 *   - i >  2^{n-1}: both states have q0 = 1. Same, controlled on q0, with
 *     indices shifted down by 2^{n-1}.
 *   - i == 2^{n-1}: exchanges |0111..> and |1000..>. The states |0111..1>
 *     and |1000..01> differ everywhere except the last qubit, so the
 *     (n-1)-qubit transposition (2^{n-2}, 2^{n-2}+1) on q0..q_{n-2},
 *     controlled on q_{n-1}, realizes (2^{n-1}, 2^{n-1}+2; n). Conjugating
 *     it by the Class II swap (2^{n-1}+1, 2^{n-1}+2; n) gives the target.
 *
 * The single-qubit base case (1, 2; 1) is X. Non-adjacent transpositions
 * chain adjacent ones: (i j) = (j-1 j)(i j-1)(j-1 j).
 */

#pragma once

#include <cstddef>

#include "numix/circuit.hpp"

namespace numix {

/// Exchange of 1-based basis states i < j on an n-qubit register.
struct Transposition {
  std::size_t i;
  std::size_t j;
  std::size_t n_qubits;

  /// Throws StructuralError unless 1 <= i < j <= 2^n.
  void validate() const;
};

/// Circuit for (i, i+1; n). Requires 1 <= i <= 2^n - 1.
Circuit adjacent_transposition(std::size_t i, std::size_t n_qubits);

/// Circuit for an arbitrary transposition.
Circuit general_transposition(const Transposition& t);

/// Convenience: accepts i, j in either order; i == j yields an empty circuit.
Circuit transposition_circuit(std::size_t i, std::size_t j,
                              std::size_t n_qubits);

}  // namespace numix
