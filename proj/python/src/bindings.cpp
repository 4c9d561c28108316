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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numix/errors.hpp"
#include "numix/oscillation.hpp"
#include "numix/pmns.hpp"
#include "numix/qasm.hpp"
#include "numix/shots.hpp"
#include "numix/subrotation.hpp"

namespace py = pybind11;
using namespace numix;

namespace {

OscillationConfig make_config(const MixingSpec& spec,
                              std::vector<double> masses, double baseline_km,
                              std::vector<double> energies,
                              std::size_t initial) {
  OscillationConfig c;
  c.spec = spec;
  c.mass_squared = std::move(masses);
  c.baseline_km = baseline_km;
  c.energies_GeV = std::move(energies);
  c.initial_flavor = initial;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Circuit synthesis and simulation for neutrino flavor mixing";

  py::register_exception<NumixError>(m, "NumixError", PyExc_ValueError);

  py::class_<Rotation>(m, "Rotation")
      .def(py::init<std::size_t, std::size_t, double, double>(), py::arg("i"),
           py::arg("j"), py::arg("theta"), py::arg("delta") = 0.0)
      .def_readwrite("i", &Rotation::i)
      .def_readwrite("j", &Rotation::j)
      .def_readwrite("theta", &Rotation::theta)
      .def_readwrite("delta", &Rotation::delta)
      .def("__repr__", [](const Rotation& r) {
        return "Rotation(" + std::to_string(r.i) + ", " + std::to_string(r.j) +
               ", " + std::to_string(r.theta) + ", " + std::to_string(r.delta) +
               ")";
      });

  py::class_<MixingSpec>(m, "MixingSpec")
      .def(py::init([](std::size_t n, std::vector<Rotation> rotations) {
             MixingSpec s{n, std::move(rotations)};
             s.validate();
             return s;
           }),
           py::arg("n_flavors"), py::arg("rotations") = std::vector<Rotation>{})
      .def_readonly("n_flavors", &MixingSpec::n_flavors)
      .def_readonly("rotations", &MixingSpec::rotations)
      .def_property_readonly("n_qubits", &MixingSpec::n_qubits)
      .def("to_json", &mixing_spec_to_json)
      .def_static("from_json", &mixing_spec_from_json)
      .def("__eq__", [](const MixingSpec& a, const MixingSpec& b) { return a == b; });

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("n_qubits", &Circuit::n_qubits)
      .def("__len__", &Circuit::size)
      .def("gate_counts", &Circuit::gate_counts)
      .def("controlled_gate_count", &Circuit::controlled_gate_count)
      .def("inverse", &Circuit::inverse)
      .def("unitary", [](const Circuit& c) { return unitary_of(c); })
      .def("gates", [](const Circuit& c) {
        std::vector<std::string> out;
        for (const Gate& g : c.gates()) out.push_back(g.to_string());
        return out;
      })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; });

  m.def("pmns3", &pmns3, py::arg("theta12"), py::arg("theta13"),
        py::arg("theta23"), py::arg("delta_cp") = 0.0);
  m.def(
      "pmns4",
      [](double t12, double t13, double t23, double t14, double t24, double t34,
         double dcp, double d14, double d24) {
        return pmns4({t12, t13, t23, t14, t24, t34, dcp, d14, d24});
      },
      py::arg("theta12") = 0.0, py::arg("theta13") = 0.0,
      py::arg("theta23") = 0.0, py::arg("theta14") = 0.0,
      py::arg("theta24") = 0.0, py::arg("theta34") = 0.0,
      py::arg("delta_cp") = 0.0, py::arg("delta14") = 0.0,
      py::arg("delta24") = 0.0);
  m.def("build_circuit", &build_circuit, py::arg("spec"));
  m.def("matrix_of", &matrix_of, py::arg("spec"));
  m.def("subrotation",
        [](std::size_t i, std::size_t j, double theta, double delta,
           std::size_t n) { return subrotation({i, j, theta, delta, n}); },
        py::arg("i"), py::arg("j"), py::arg("theta"), py::arg("delta"),
        py::arg("n_qubits"));

  m.def(
      "analytic_probability",
      [](const MixingSpec& spec, std::vector<double> masses, double baseline_km,
         std::size_t alpha, std::size_t beta, double energy) {
        const auto cfg = make_config(spec, std::move(masses), baseline_km, {}, alpha);
        return analytic_probability(spec, cfg, alpha, beta, energy);
      },
      py::arg("spec"), py::arg("mass_squared"), py::arg("baseline_km"),
      py::arg("alpha"), py::arg("beta"), py::arg("energy_GeV"));
  m.def(
      "evolution_circuit",
      [](const MixingSpec& spec, std::vector<double> phases) {
        return evolution_circuit(spec, PhaseOperator{std::move(phases)});
      },
      py::arg("spec"), py::arg("phases"));
  m.def(
      "probability_sweep",
      [](const MixingSpec& spec, std::vector<double> masses, double baseline_km,
         std::vector<double> energies, std::size_t initial,
         const std::string& mode, std::uint64_t shots, std::uint64_t seed,
         std::optional<std::vector<double>> noise) {
        ShotSettings settings;
        settings.shots = shots;
        settings.seed = seed;
        if (noise) settings.noise = NoiseModel(*noise);
        const SweepResult r = probability_sweep(
            make_config(spec, std::move(masses), baseline_km, std::move(energies),
                        initial),
            sweep_mode_from_string(mode), settings);
        py::list rows;
        for (const SweepRow& row : r.rows) {
          py::dict d;
          d["x"] = row.x;
          d["alpha"] = row.alpha;
          d["beta"] = row.beta;
          d["probability"] = row.probability;
          if (row.raw_probability) d["raw_probability"] = *row.raw_probability;
          if (row.corrected_probability) {
            d["corrected_probability"] = *row.corrected_probability;
          }
          rows.append(d);
        }
        return rows;
      },
      py::arg("spec"), py::arg("mass_squared"), py::arg("baseline_km"),
      py::arg("energies_GeV"), py::arg("initial_flavor") = 1,
      py::arg("mode") = "analytic", py::arg("shots") = 8192,
      py::arg("seed") = 0, py::arg("noise") = py::none());

  m.def("lower", &lower, py::arg("circuit"));
  m.def("is_lowered", &is_lowered, py::arg("circuit"));
  m.def(
      "emit_qasm",
      [](const Circuit& c, bool measure) { return emit_qasm(c, {measure}); },
      py::arg("circuit"), py::arg("measure") = false);
  m.def(
      "parse_qasm",
      [](const std::string& text) { return parse_qasm(text).circuit; },
      py::arg("text"));

  m.def(
      "sample",
      [](const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
        return sample(state, shots, seed).counts;
      },
      py::arg("state"), py::arg("shots"), py::arg("seed"));
  m.def(
      "apply_confusion",
      [](const std::vector<double>& probs, std::vector<double> rates) {
        return apply_confusion(probs, NoiseModel(std::move(rates)));
      },
      py::arg("probabilities"), py::arg("flip_rates"));
  m.def(
      "invert_confusion",
      [](const std::vector<double>& probs, std::vector<double> rates) {
        return invert_confusion(probs, NoiseModel(std::move(rates)));
      },
      py::arg("probabilities"), py::arg("flip_rates"));

  m.attr("PHASE_PER_MASS_SQUARED") = kPhasePerMassSquared;
  m.attr("RNG_ALGORITHM") = kRngAlgorithm;
}
