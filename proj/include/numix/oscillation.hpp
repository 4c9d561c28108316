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
 * @file oscillation.hpp
 * @brief Vacuum oscillation probabilities, analytically and by simulating
 * the U D U^dagger circuit.
 *
 * Units: masses squared in eV^2, baselines in km, energies in GeV. The mass
 * state phase is m^2 L / (2E) = kPhasePerMassSquared * m^2 L / E, with
 * kPhasePerMassSquared = 1e-6 / (2 hbar c [eV m]) ~= 2.534. Only phase
 * differences are observable.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numix/circuit.hpp"
#include "numix/pmns.hpp"
#include "numix/shots.hpp"

namespace numix {

inline constexpr double kHbarCeVm = 1.973269804e-7;
inline constexpr double kPhasePerMassSquared = 1e-6 / (2.0 * kHbarCeVm);

struct OscillationConfig {
  std::vector<double> mass_squared;  // eV^2, one per flavor
  double baseline_km = 0.0;
  std::vector<double> energies_GeV;
  std::size_t initial_flavor = 1;  // 1-based
  MixingSpec spec;

  /// Throws InvalidConfigError / StructuralError on violated invariants.
  void validate() const;
};

/// diag(e^{-i phi_1}, ..., e^{-i phi_N}).
struct PhaseOperator {
  std::vector<double> phases;

  static PhaseOperator from_masses(const std::vector<double>& mass_squared,
                                   double baseline_km, double energy_GeV);
};

/// |sum_i U*_{alpha i} U_{beta i} e^{-i m_i^2 L / 2E}|^2 from matrix_of.
/// alpha, beta are 1-based. Throws InvalidConfigError when E <= 0.
double analytic_probability(const MixingSpec& spec,
                            const OscillationConfig& config, std::size_t alpha,
                            std::size_t beta, double energy_GeV);

/// Exact diagonal phase circuit; entries past phases.size() get phase 0.
Circuit phase_circuit(const PhaseOperator& phases, std::size_t n_qubits);

/// U_PMNS^dagger, then the phase operator, then U_PMNS.
Circuit evolution_circuit(const MixingSpec& spec, const PhaseOperator& phases);

/// State after evolving basis state `alpha` (1-based) through the circuit.
StateVector evolve_flavor(const MixingSpec& spec, const PhaseOperator& phases,
                          std::size_t alpha);

enum class SweepMode { kAnalytic, kExactCircuit, kShots };

std::string to_string(SweepMode mode);
/// Accepts "analytic", "exact-circuit", "shots".
SweepMode sweep_mode_from_string(const std::string& text);

struct ShotSettings {
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  /// Injected readout noise. When set, the flip rates used for correction
  /// are calibrated from a noisy zero-distance run, not copied from here.
  std::optional<NoiseModel> noise;
};

struct SweepRow {
  double x;  // energy in GeV
  std::size_t alpha;
  std::size_t beta;
  double probability;
  std::optional<double> raw_probability;
  std::optional<double> corrected_probability;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Flip rates measured at L/E = 0, when noise was injected.
  std::optional<NoiseModel> calibration;
};

/// One row per (energy, final flavor), ordered by energy then flavor.
SweepResult probability_sweep(const OscillationConfig& config, SweepMode mode,
                              const ShotSettings& shots = {});

/// CSV with header `x,channel,probability,mode` (plus
/// `raw_probability,corrected_probability` in shots mode); shortest
/// round-trip float formatting, LF endings.
std::string sweep_to_csv(const SweepResult& result, SweepMode mode,
                         const FlavorBasisMap& labels);

}  // namespace numix
