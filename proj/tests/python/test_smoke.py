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

import math

import numpy as np
import pytest

import numix


def test_pmns3_circuit_matches_matrix():
    spec = numix.pmns3(0.5836, 0.1496, 0.8587, -1.9)
    u = numix.build_circuit(spec).unitary()
    assert u.shape == (4, 4)
    assert np.max(np.abs(u[:3, :3] - numix.matrix_of(spec))) < 1e-12
    assert abs(u[3, 3] - 1) < 1e-12


def test_spec_json_round_trip():
    spec = numix.MixingSpec(4, [numix.Rotation(1, 4, 0.2, 0.3)])
    assert numix.MixingSpec.from_json(spec.to_json()) == spec
    assert spec.n_qubits == 2


def test_invalid_spec_raises():
    with pytest.raises(ValueError):
        numix.MixingSpec(4, [numix.Rotation(2, 2, 0.1)])
    with pytest.raises(numix.NumixError):
        numix.MixingSpec.from_json("{oops")


def test_two_flavor_probability():
    spec = numix.MixingSpec(2, [numix.Rotation(1, 2, math.pi / 4)])
    p = numix.analytic_probability(spec, [0.0, 2.5e-3], 810.0, 1, 2, 1.6)
    dphi = numix.PHASE_PER_MASS_SQUARED * 2.5e-3 * 810.0 / 1.6
    assert p == pytest.approx(math.sin(dphi / 2) ** 2, abs=1e-14)


def test_sweep_modes_agree():
    spec = numix.pmns3(0.58, 0.15, 0.86, 1.2)
    kwargs = dict(mass_squared=[0, 7.4e-5, 2.5e-3], baseline_km=1300.0,
                  energies_GeV=[0.5, 1.0, 2.0], initial_flavor=2)
    a = numix.probability_sweep(spec, mode="analytic", **kwargs)
    c = numix.probability_sweep(spec, mode="exact-circuit", **kwargs)
    assert len(a) == 9
    for ra, rc in zip(a, c):
        assert ra["probability"] == pytest.approx(rc["probability"], abs=1e-9)
    s = numix.probability_sweep(spec, mode="shots", seed=7,
                                noise=[0.125, 0.196], **kwargs)
    assert "corrected_probability" in s[0]


def test_qasm_round_trip():
    c = numix.lower(numix.build_circuit(numix.pmns4(theta12=0.5, theta14=0.2,
                                                    delta14=0.4)))
    assert numix.is_lowered(c)
    text = numix.emit_qasm(c, measure=True)
    assert text.startswith("OPENQASM 2.0;")
    assert numix.parse_qasm(text) == c


def test_sampling_and_correction():
    state = np.array([1, 0, 0, 0], dtype=complex)
    assert numix.sample(state, 100, 1) == [100, 0, 0, 0]
    truth = [0.1, 0.6, 0.25, 0.05]
    noisy = numix.apply_confusion(truth, [0.125, 0.196])
    back = numix.invert_confusion(noisy, [0.125, 0.196])
    assert np.allclose(back, truth, atol=1e-12)
