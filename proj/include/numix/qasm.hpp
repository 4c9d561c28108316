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
 * @file qasm.hpp
 * @brief Lowering to {u3, x, u1} with at most one control, and OpenQASM 2.0
 * text in and out.
 *
 * Multi-controlled gates are expanded with the controlled-square-root
 * identity. For controls C' + {c} and W = V^2, in time order:
 *
 *     C^{c} V_t,  C^{C'} X_c,  C^{c} V^dagger_t,  C^{C'} X_c,  C^{C'} V_t
 *
 * recursing until one control is left. Square roots keep the U3 form
 * U3(theta/2, phi, -phi) when W = U3(theta, phi, -phi) and Phase(l/2) for
 * Phase(l); anything else (X included) uses the principal matrix root,
 * whose global phase becomes a u1 on the control qubit. Anticontrols are
 * replaced by X conjugation first. The result is equal to the input as a
 * matrix, global phase included.
 */

#pragma once

#include <string>

#include "numix/circuit.hpp"

namespace numix {

/// True when every gate is U3, X or Phase with at most one control and no
/// anticontrols.
bool is_lowered(const Circuit& circuit);

Circuit lower(const Circuit& circuit);

struct QasmOptions {
  bool measure = false;
};

/// OpenQASM 2.0 for a lowered circuit. Throws QasmError naming the first
/// gate that is not lowered.
std::string emit_qasm(const Circuit& circuit, const QasmOptions& options = {});

struct ParsedQasm {
  Circuit circuit;
  bool measured = false;
};

/// Reads the subset emit_qasm writes (plus barriers and comments). Angle
/// arguments may be decimal literals or simple products/quotients with pi.
ParsedQasm parse_qasm(const std::string& text);

}  // namespace numix
