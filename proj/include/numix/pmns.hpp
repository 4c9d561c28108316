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

#include <cstddef>
#include <string>
#include <vector>

#include "numix/circuit.hpp"

namespace numix {

/// One factor R^{ij}(theta, delta) of a mixing matrix. States are 1-based.
struct Rotation {
  std::size_t i;
  std::size_t j;
  double theta;
  double delta = 0.0;
  bool operator==(const Rotation&) const = default;
};

/// An N-flavor mixing matrix as an ordered product of sub-rotations. The
/// first rotation is the leftmost matrix factor, i.e. it is applied last.
struct MixingSpec {
  std::size_t n_flavors = 0;
  std::vector<Rotation> rotations;

  /// Throws StructuralError unless N >= 2 and every 1 <= i < j <= N.
  void validate() const;

  /// ceil(log2 N), at least 1.
  std::size_t n_qubits() const;

  bool operator==(const MixingSpec&) const = default;
};

/// Flavor labels for basis states 1..2^n. States beyond the physical
/// flavors are unphysical sterile padding.
struct FlavorBasisMap {
  std::vector<std::string> labels;

  /// e, mu, tau, then s, s2, ... for N >= 4; states past N are "sterile".
  static FlavorBasisMap standard(std::size_t n_flavors, std::size_t dim);

  const std::string& label(std::size_t state) const;
};

/// U = R^23(theta23) R^13(theta13, delta_cp) R^12(theta12).
MixingSpec pmns3(double theta12, double theta13, double theta23,
                 double delta_cp);

struct Pmns4Angles {
  double theta12 = 0, theta13 = 0, theta23 = 0;
  double theta14 = 0, theta24 = 0, theta34 = 0;
  double delta_cp = 0, delta14 = 0, delta24 = 0;
};

/// U = R^34 R^24(d24) R^14(d14) R^23 R^13(dcp) R^12.
MixingSpec pmns4(const Pmns4Angles& a);

/// Circuit on ceil(log2 N) qubits whose unitary restricted to the first N
/// states equals matrix_of(spec). Two-qubit registers use the closed-form
/// sub-rotations.
Circuit build_circuit(const MixingSpec& spec);

/// Explicit N x N product of sub-rotation matrices; never built from
/// circuits.
UnitaryMatrix matrix_of(const MixingSpec& spec);

/// Copy of `spec` with every rotation angle converted from degrees.
MixingSpec spec_from_degrees(MixingSpec spec);

/// {"n_flavors": int, "rotations": [{"i","j","theta","delta"}]}.
/// Throws StructuralError on schema or index violations.
MixingSpec mixing_spec_from_json(const std::string& text);
std::string mixing_spec_to_json(const MixingSpec& spec);

}  // namespace numix
