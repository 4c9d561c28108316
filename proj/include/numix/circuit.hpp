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

#pragma once

#include "numix/gate.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace numix {

using StateVector = Eigen::VectorXcd;

/// Ordered gate list over a fixed register. Gates are stored in time order:
/// the first gate acts first, so its matrix is the rightmost factor.
class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws StructuralError if the gate touches a qubit >= n_qubits.
  Circuit& append(Gate gate);
  /// Appends every gate of `other`, which must not be wider than this.
  Circuit& append(const Circuit& other);

  /// Reversed order, each gate inverted.
  Circuit inverse() const;

  /// Every gate gains control (or anticontrol) on `q`; `q` must be unused.
  Circuit controlled(Qubit q, bool anti = false) const;

  /// Re-homes the circuit onto a register of `n_qubits` with every index
  /// moved up by `offset`.
  Circuit shifted(Qubit offset, std::size_t n_qubits) const;

  /// Gate counts keyed by a label such as "x", "cx", "mcx", "cu3".
  std::map<std::string, std::size_t> gate_counts() const;

  /// Number of gates carrying at least one control or anticontrol.
  std::size_t controlled_gate_count() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_qubits_;
  std::vector<Gate> gates_;
};

/// Applies `gate` in place to a state of 2^n amplitudes.
void apply_gate(const Gate& gate, std::size_t n_qubits,
                std::span<Complex> amplitudes);

/// Runs the circuit on `state` (length 2^n).
StateVector simulate(const Circuit& circuit, StateVector state);

/// Full-register matrix of a single gate. Throws StructuralError when the
/// gate does not fit in `n_qubits`.
UnitaryMatrix embed(const Gate& gate, std::size_t n_qubits);

/// Dense unitary of the circuit: later gates multiply on the left.
UnitaryMatrix unitary_of(const Circuit& circuit);

/// Replaces each anticontrol on q by X(q), control(q), X(q).
Circuit negate_anticontrols(const Circuit& circuit);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// max |U U^dagger - I| <= tol.
bool is_unitary(const UnitaryMatrix& u, double tol = kUnitarityTolerance);

/// Bit value of `q` in basis index `index` under the q0-most-significant
/// convention.
inline bool qubit_bit(std::size_t index, Qubit q, std::size_t n_qubits) {
  return (index >> (n_qubits - 1 - q)) & 1U;
}

}  // namespace numix
