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

#include "numix/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "numix/errors.hpp"

namespace numix {

namespace {

std::size_t bit_of(Qubit q, std::size_t n_qubits) {
  return std::size_t{1} << (n_qubits - 1 - q);
}

void check_fits(const Gate& gate, std::size_t n_qubits) {
  if (gate.max_qubit() >= n_qubits) {
    throw StructuralError("gate " + gate.to_string() + " does not fit in " +
                          std::to_string(n_qubits) + " qubits");
  }
}

}  // namespace

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > 20) {
    throw StructuralError("qubit count must be in [1, 20], got " +
                          std::to_string(n_qubits));
  }
}

Circuit& Circuit::append(Gate gate) {
  check_fits(gate, n_qubits_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ > n_qubits_) {
    throw StructuralError("cannot append a wider circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

Circuit Circuit::controlled(Qubit q, bool anti) const {
  if (q >= n_qubits_) {
    throw StructuralError("control qubit out of range");
  }
  Circuit out(n_qubits_);
  out.gates_.reserve(gates_.size());
  for (const Gate& g : gates_) out.gates_.push_back(g.with_control(q, anti));
  return out;
}

Circuit Circuit::shifted(Qubit offset, std::size_t n_qubits) const {
  Circuit out(n_qubits);
  for (const Gate& g : gates_) out.append(g.shifted(offset));
  return out;
}

std::map<std::string, std::size_t> Circuit::gate_counts() const {
  std::map<std::string, std::size_t> counts;
  for (const Gate& g : gates_) ++counts[g.name()];
  return counts;
}

std::size_t Circuit::controlled_gate_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [](const Gate& g) { return g.num_controls() > 0; }));
}

void apply_gate(const Gate& gate, std::size_t n_qubits,
                std::span<Complex> amplitudes) {
  check_fits(gate, n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (amplitudes.size() != dim) {
    throw StructuralError("state length does not match qubit count");
  }
  std::size_t ctrl_mask = 0;
  std::size_t ctrl_value = 0;
  for (Qubit q : gate.controls()) {
    ctrl_mask |= bit_of(q, n_qubits);
    ctrl_value |= bit_of(q, n_qubits);
  }
  for (Qubit q : gate.anticontrols()) ctrl_mask |= bit_of(q, n_qubits);

  const std::size_t tbit = bit_of(gate.target(), n_qubits);
  if (const auto* s = std::get_if<Swap>(&gate.kind())) {
    const std::size_t obit = bit_of(s->other, n_qubits);
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & ctrl_mask) != ctrl_value) continue;
      if ((i & tbit) && !(i & obit)) {
        std::swap(amplitudes[i], amplitudes[(i & ~tbit) | obit]);
      }
    }
    return;
  }
  const Matrix2 m = gate.target_matrix();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & tbit) || (i & ctrl_mask) != ctrl_value) continue;
    const std::size_t j = i | tbit;
    const Complex a0 = amplitudes[i];
    const Complex a1 = amplitudes[j];
    amplitudes[i] = m(0, 0) * a0 + m(0, 1) * a1;
    amplitudes[j] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

StateVector simulate(const Circuit& circuit, StateVector state) {
  if (static_cast<std::size_t>(state.size()) != circuit.dim()) {
    throw StructuralError("state length does not match circuit width");
  }
  std::span<Complex> amps(state.data(), static_cast<std::size_t>(state.size()));
  for (const Gate& g : circuit.gates()) apply_gate(g, circuit.n_qubits(), amps);
  return state;
}

UnitaryMatrix embed(const Gate& gate, std::size_t n_qubits) {
  Circuit c(n_qubits);
  c.append(gate);
  return unitary_of(c);
}

UnitaryMatrix unitary_of(const Circuit& circuit) {
  const auto dim = static_cast<Eigen::Index>(circuit.dim());
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  // Column-major storage: each column is a contiguous state vector.
  for (Eigen::Index col = 0; col < dim; ++col) {
    std::span<Complex> column(u.col(col).data(), static_cast<std::size_t>(dim));
    for (const Gate& g : circuit.gates()) {
      apply_gate(g, circuit.n_qubits(), column);
    }
  }
  return u;
}

Circuit negate_anticontrols(const Circuit& circuit) {
  Circuit out(circuit.n_qubits());
  for (const Gate& g : circuit.gates()) {
    if (g.anticontrols().empty()) {
      out.append(g);
      continue;
    }
    for (Qubit q : g.anticontrols()) out.append(Gate::x(q));
    std::vector<Qubit> controls = g.controls();
    controls.insert(controls.end(), g.anticontrols().begin(),
                    g.anticontrols().end());
    out.append(Gate(g.kind(), g.target(), std::move(controls)));
    for (Qubit q : g.anticontrols()) out.append(Gate::x(q));
  }
  return out;
}

double max_abs_diff(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw StructuralError("matrix shapes differ");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const UnitaryMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const UnitaryMatrix id = UnitaryMatrix::Identity(u.rows(), u.cols());
  return max_abs_diff(u * u.adjoint(), id) <= tol;
}

}  // namespace numix
