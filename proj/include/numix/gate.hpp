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
 * @file gate.hpp
 * @brief Primitive gate set, exact 2x2 matrices, and (anti)controlled gates.
 *
 * Qubit 0 is the most significant bit of a basis-state index. Basis state
 * number k (1-based, as used by sub-rotations and transpositions) is the
 * computational state whose binary value is k - 1.
 */

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace numix {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
/// Dense complex matrix, column-major. Used for every unitary denotation.
using UnitaryMatrix = Eigen::MatrixXcd;

using Qubit = std::size_t;

/// Max-norm tolerance under which a matrix is considered unitary.
inline constexpr double kUnitarityTolerance = 1e-12;

struct U3 {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  bool operator==(const U3&) const = default;
};

struct PauliX {
  bool operator==(const PauliX&) const = default;
};

/// diag(1, e^{i lambda}); the U1 gate.
struct Phase {
  double lambda = 0.0;
  bool operator==(const Phase&) const = default;
};

/// Exchanges the target qubit with `other`.
struct Swap {
  Qubit other = 0;
  bool operator==(const Swap&) const = default;
};

using GateKind = std::variant<U3, PauliX, Phase, Swap>;

/// Exact U3 matrix [[c, -s e^{il}], [s e^{ip}, c e^{i(p+l)}]] with c, s of
/// theta/2. Throws InvalidAngleError on non-finite input.
Matrix2 u3_matrix(double theta, double phi, double lambda);

Matrix2 pauli_x_matrix();
Matrix2 phase_matrix(double lambda);

/// A primitive applied to `target` when every qubit in `controls` reads 1
/// and every qubit in `anticontrols` reads 0. Control lists are kept sorted
/// and duplicate-free.
class Gate {
 public:
  Gate(GateKind kind, Qubit target, std::vector<Qubit> controls = {},
       std::vector<Qubit> anticontrols = {});

  static Gate u3(double theta, double phi, double lambda, Qubit target,
                 std::vector<Qubit> controls = {},
                 std::vector<Qubit> anticontrols = {});
  static Gate x(Qubit target, std::vector<Qubit> controls = {},
                std::vector<Qubit> anticontrols = {});
  static Gate phase(double lambda, Qubit target,
                    std::vector<Qubit> controls = {},
                    std::vector<Qubit> anticontrols = {});
  static Gate swap(Qubit a, Qubit b, std::vector<Qubit> controls = {},
                   std::vector<Qubit> anticontrols = {});

  const GateKind& kind() const { return kind_; }
  Qubit target() const { return target_; }
  const std::vector<Qubit>& controls() const { return controls_; }
  const std::vector<Qubit>& anticontrols() const { return anticontrols_; }

  bool is_swap() const { return std::holds_alternative<Swap>(kind_); }
  std::size_t num_controls() const {
    return controls_.size() + anticontrols_.size();
  }

  /// Largest qubit index the gate touches.
  Qubit max_qubit() const;

  /// 2x2 matrix applied to the target; undefined for Swap (throws).
  Matrix2 target_matrix() const;

  /// Same qubits, inverse primitive.
  Gate inverse() const;

  /// Copy with every qubit index shifted by `offset`.
  Gate shifted(Qubit offset) const;

  /// Copy with an additional control (or anticontrol) qubit.
  Gate with_control(Qubit q, bool anti = false) const;

  std::string name() const;
  std::string to_string() const;

  bool operator==(const Gate&) const = default;

 private:
  GateKind kind_;
  Qubit target_;
  std::vector<Qubit> controls_;
  std::vector<Qubit> anticontrols_;
};

}  // namespace numix
