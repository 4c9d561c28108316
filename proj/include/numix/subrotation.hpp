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
 * @file subrotation.hpp
 * @brief Sub-rotation circuits R^{ij}(theta, delta).
 *
 * R^{ij} is the identity except on basis states i, j (1-based) where it acts
 * as
 *
 *     [[ cos(theta),               sin(theta) e^{-i delta} ],
 *      [ -sin(theta) e^{i delta},  cos(theta)              ]].
 *
 * R^{12} is synthesized directly; every other R^{ij} is obtained by
 * conjugating R^{12} with the permutation P = (i 1)(j 2), which maps
 * states 1, 2 onto i, j.
 */

#pragma once

#include <cstddef>

#include "numix/circuit.hpp"

namespace numix {

struct SubRotation {
  std::size_t i;
  std::size_t j;
  double theta;
  double delta;
  std::size_t n_qubits;

  /// Throws StructuralError unless 1 <= i < j <= 2^n.
  void validate() const;
};

/// The 2x2 block a sub-rotation applies to states (i, j).
Matrix2 subrotation_block(double theta, double delta);

/// R^{12}(theta, delta) on n qubits.
///   n = 1: the bare U3(-2 theta, delta, -delta).
///   n = 2: U3(-2 theta, delta, -delta) on q1 anticontrolled by q0.
///   n >= 3: X on every qubit around the two-level controlled-square-root
///           construction with V = U3(theta, -delta, delta); multi-controls
///           stay symbolic (see lower()).
Circuit base_subrotation(double theta, double delta, std::size_t n_qubits);

/// CP-conserving R^{12}(theta, 0) for n >= 2: two (n-1)-controlled X gates
/// on the last qubit interleaved with real rotations.
Circuit base_subrotation_cp0(double theta, std::size_t n_qubits);

/// Any R^{ij}, by permutation conjugation of base_subrotation. Uses the CP
/// conserving base when delta == 0 and n >= 3.
Circuit subrotation(const SubRotation& s);

/// Hand-simplified two-qubit circuits for all six R^{ij}. Throws
/// UnsupportedError when n != 2.
Circuit subrotation_2q_closed_form(const SubRotation& s);

}  // namespace numix
