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

#include "numix/oscillation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "numix/errors.hpp"

namespace numix {

namespace {

void require_energy(double energy_GeV) {
  if (!(energy_GeV > 0.0) || !std::isfinite(energy_GeV)) {
    throw InvalidConfigError("energy must be positive and finite");
  }
}

// splitmix64 finalizer; gives every grid point its own seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

void OscillationConfig::validate() const {
  spec.validate();
  if (mass_squared.size() != spec.n_flavors) {
    throw InvalidConfigError("expected " + std::to_string(spec.n_flavors) +
                             " mass-squared values, got " +
                             std::to_string(mass_squared.size()));
  }
  for (double m : mass_squared) {
    if (!std::isfinite(m)) throw InvalidConfigError("mass squared not finite");
  }
  if (!std::isfinite(baseline_km) || baseline_km < 0.0) {
    throw InvalidConfigError("baseline must be finite and non-negative");
  }
  for (double e : energies_GeV) require_energy(e);
  if (initial_flavor < 1 || initial_flavor > spec.n_flavors) {
    throw StructuralError("initial flavor out of range");
  }
}

PhaseOperator PhaseOperator::from_masses(const std::vector<double>& mass_squared,
                                         double baseline_km,
                                         double energy_GeV) {
  require_energy(energy_GeV);
  PhaseOperator op;
  op.phases.reserve(mass_squared.size());
  for (double m2 : mass_squared) {
    op.phases.push_back(kPhasePerMassSquared * m2 * baseline_km / energy_GeV);
  }
  return op;
}

double analytic_probability(const MixingSpec& spec,
                            const OscillationConfig& config, std::size_t alpha,
                            std::size_t beta, double energy_GeV) {
  require_energy(energy_GeV);
  if (alpha < 1 || beta < 1 || alpha > spec.n_flavors ||
      beta > spec.n_flavors) {
    throw StructuralError("flavor index out of range");
  }
  if (config.mass_squared.size() != spec.n_flavors) {
    throw InvalidConfigError("mass-squared count does not match flavors");
  }
  const UnitaryMatrix u = matrix_of(spec);
  const PhaseOperator ph = PhaseOperator::from_masses(
      config.mass_squared, config.baseline_km, energy_GeV);
  const auto a = static_cast<Eigen::Index>(alpha - 1);
  const auto b = static_cast<Eigen::Index>(beta - 1);
  Complex amp = 0.0;
  for (Eigen::Index i = 0; i < u.cols(); ++i) {
    amp += std::conj(u(a, i)) * u(b, i) *
           std::polar(1.0, -ph.phases[static_cast<std::size_t>(i)]);
  }
  return std::norm(amp);
}

Circuit phase_circuit(const PhaseOperator& phases, std::size_t n_qubits) {
  Circuit out(n_qubits);
  if (phases.phases.size() > out.dim()) {
    throw StructuralError("more phases than basis states");
  }
  const Qubit last = n_qubits - 1;
  for (std::size_t k = 0; k < phases.phases.size(); ++k) {
    const double lambda = -phases.phases[k];
    if (lambda == 0.0) continue;
    // Select basis value k with (anti)controls on q0..q_{n-2}; the last
    // qubit is the phase target, flipped around the gate when its bit is 0.
    std::vector<Qubit> on;
    std::vector<Qubit> off;
    for (Qubit q = 0; q < last; ++q) {
      (qubit_bit(k, q, n_qubits) ? on : off).push_back(q);
    }
    const bool target_set = qubit_bit(k, last, n_qubits);
    if (!target_set) out.append(Gate::x(last));
    out.append(Gate::phase(lambda, last, on, off));
    if (!target_set) out.append(Gate::x(last));
  }
  return out;
}

Circuit evolution_circuit(const MixingSpec& spec, const PhaseOperator& phases) {
  if (phases.phases.size() != spec.n_flavors) {
    throw InvalidConfigError("phase count does not match flavors");
  }
  const Circuit mix = build_circuit(spec);
  Circuit out(mix.n_qubits());
  out.append(mix.inverse());
  out.append(phase_circuit(phases, mix.n_qubits()));
  out.append(mix);
  return out;
}

StateVector evolve_flavor(const MixingSpec& spec, const PhaseOperator& phases,
                          std::size_t alpha) {
  if (alpha < 1 || alpha > spec.n_flavors) {
    throw StructuralError("flavor index out of range");
  }
  const Circuit c = evolution_circuit(spec, phases);
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(c.dim()));
  psi[static_cast<Eigen::Index>(alpha - 1)] = 1.0;
  return simulate(c, std::move(psi));
}

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::kAnalytic:
      return "analytic";
    case SweepMode::kExactCircuit:
      return "exact-circuit";
    case SweepMode::kShots:
      return "shots";
  }
  return "unknown";
}

SweepMode sweep_mode_from_string(const std::string& text) {
  if (text == "analytic") return SweepMode::kAnalytic;
  if (text == "exact-circuit") return SweepMode::kExactCircuit;
  if (text == "shots") return SweepMode::kShots;
  throw InvalidConfigError("unknown sweep mode '" + text + "'");
}

SweepResult probability_sweep(const OscillationConfig& config, SweepMode mode,
                              const ShotSettings& shots) {
  config.validate();
  const MixingSpec& spec = config.spec;
  const std::size_t n_flavors = spec.n_flavors;
  const std::size_t alpha = config.initial_flavor;
  SweepResult result;

  std::optional<NoiseModel> correction;
  if (mode == SweepMode::kShots) {
    if (shots.shots == 0) throw InvalidConfigError("shots must be positive");
    if (shots.noise) {
      // At L/E = 0 the evolution is the identity, so the prepared flavor
      // state is what a perfect readout would report.
      const std::size_t n = spec.n_qubits();
      StateVector psi =
          StateVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
      psi[static_cast<Eigen::Index>(alpha - 1)] = 1.0;
      const std::uint64_t cal_seed = mix_seed(shots.seed, ~std::uint64_t{0});
      const ShotCounts clean = sample(psi, shots.shots, cal_seed);
      correction =
          calibrate(apply_readout_noise(clean, *shots.noise, cal_seed),
                    alpha - 1);
      result.calibration = correction;
    }
  }

  std::vector<double> energies = config.energies_GeV;
  std::sort(energies.begin(), energies.end());
  for (std::size_t e = 0; e < energies.size(); ++e) {
    const double energy = energies[e];
    switch (mode) {
      case SweepMode::kAnalytic:
        for (std::size_t beta = 1; beta <= n_flavors; ++beta) {
          result.rows.push_back(
              {energy, alpha, beta,
               analytic_probability(spec, config, alpha, beta, energy),
               std::nullopt, std::nullopt});
        }
        break;
      case SweepMode::kExactCircuit: {
        const StateVector psi = evolve_flavor(
            spec,
            PhaseOperator::from_masses(config.mass_squared, config.baseline_km,
                                       energy),
            alpha);
        for (std::size_t beta = 1; beta <= n_flavors; ++beta) {
          result.rows.push_back({energy, alpha, beta,
                                 std::norm(psi[static_cast<Eigen::Index>(beta - 1)]),
                                 std::nullopt, std::nullopt});
        }
        break;
      }
      case SweepMode::kShots: {
        StateVector psi = evolve_flavor(
            spec,
            PhaseOperator::from_masses(config.mass_squared, config.baseline_km,
                                       energy),
            alpha);
        // Absorb rounding so the sampler's normalization check is about the
        // circuit, not accumulated floating error.
        psi.normalize();
        const std::uint64_t seed = mix_seed(shots.seed, e);
        ShotCounts counts = sample(psi, shots.shots, seed);
        if (shots.noise) counts = apply_readout_noise(counts, *shots.noise, seed);
        const std::vector<double> raw = counts.frequencies();
        const std::vector<double> fixed =
            correction ? invert_confusion(raw, *correction) : raw;
        for (std::size_t beta = 1; beta <= n_flavors; ++beta) {
          result.rows.push_back({energy, alpha, beta, fixed[beta - 1],
                                 raw[beta - 1], fixed[beta - 1]});
        }
        break;
      }
    }
  }
  return result;
}

std::string sweep_to_csv(const SweepResult& result, SweepMode mode,
                         const FlavorBasisMap& labels) {
  const bool shots = mode == SweepMode::kShots;
  std::string out = "x,channel,probability,mode";
  if (shots) out += ",raw_probability,corrected_probability";
  out += '\n';
  const std::string mode_name = to_string(mode);
  for (const SweepRow& row : result.rows) {
    append_double(out, row.x);
    out += ',';
    out += labels.label(row.alpha) + "->" + labels.label(row.beta);
    out += ',';
    append_double(out, row.probability);
    out += ',';
    out += mode_name;
    if (shots) {
      out += ',';
      append_double(out, row.raw_probability.value_or(row.probability));
      out += ',';
      append_double(out, row.corrected_probability.value_or(row.probability));
    }
    out += '\n';
  }
  return out;
}

}  // namespace numix
