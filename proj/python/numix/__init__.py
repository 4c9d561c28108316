# Copyright 2026 The numix Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Quantum circuits for neutrino flavor mixing and vacuum oscillation."""

from ._core import (
    PHASE_PER_MASS_SQUARED,
    RNG_ALGORITHM,
    Circuit,
    MixingSpec,
    NumixError,
    Rotation,
    analytic_probability,
    apply_confusion,
    build_circuit,
    emit_qasm,
    evolution_circuit,
    invert_confusion,
    is_lowered,
    lower,
    matrix_of,
    parse_qasm,
    pmns3,
    pmns4,
    probability_sweep,
    sample,
    subrotation,
)

__all__ = [
    "PHASE_PER_MASS_SQUARED",
    "RNG_ALGORITHM",
    "Circuit",
    "MixingSpec",
    "NumixError",
    "Rotation",
    "analytic_probability",
    "apply_confusion",
    "build_circuit",
    "emit_qasm",
    "evolution_circuit",
    "invert_confusion",
    "is_lowered",
    "lower",
    "matrix_of",
    "parse_qasm",
    "pmns3",
    "pmns4",
    "probability_sweep",
    "sample",
    "subrotation",
]
