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
 * @file shots.hpp
 * @brief Finite-shot measurement, symmetric readout bit-flip noise, and
 * zero-distance calibration with confusion-matrix inversion.
 *
 * Outcomes are indexed by computational basis value (0-based, q0 most
 * significant), not by 1-based flavor state numbers.
 *
 * Random streams come from std::mt19937_64 seeded through std::seed_seq
 * with {seed, stream}. kRngAlgorithm names the generator in reports.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "numix/circuit.hpp"

namespace numix {

inline constexpr const char* kRngAlgorithm = "mt19937_64/seed_seq";

/// Per-qubit symmetric readout flip probabilities, each in [0, 0.5).
class NoiseModel {
 public:
  NoiseModel() = default;
  /// Throws InvalidConfigError for rates outside [0, 0.5).
  explicit NoiseModel(std::vector<double> per_qubit_flip);

  const std::vector<double>& flip_rates() const { return flip_; }
  std::size_t n_qubits() const { return flip_.size(); }

 private:
  std::vector<double> flip_;
};

struct ShotCounts {
  std::size_t n_qubits = 0;
  std::uint64_t shots = 0;
  /// counts[k] = number of shots that read basis value k; length 2^n.
  std::vector<std::uint64_t> counts;

  std::vector<double> frequencies() const;
};

/// Multinomial draw of `shots` outcomes from |amplitude|^2. Throws
/// InvalidConfigError when the state norm deviates from 1 by more than 1e-9.
ShotCounts sample(const StateVector& state, std::uint64_t shots,
                  std::uint64_t seed);

/// Flips each recorded bit of qubit q independently with probability p_q.
ShotCounts apply_readout_noise(const ShotCounts& counts,
                               const NoiseModel& model, std::uint64_t seed);

/// Flip rate of qubit q = fraction of shots where q disagrees with the bit of
/// `true_state`. Throws InvalidConfigError for zero shots or a rate outside
/// the NoiseModel range.
NoiseModel calibrate(const ShotCounts& zero_distance_counts,
                     std::size_t true_state);

/// Exact forward map: distribution after independent per-qubit flips.
std::vector<double> apply_confusion(const std::vector<double>& probabilities,
                                    const NoiseModel& model);

/// Applies the inverse of the tensor product of [[1-p, p], [p, 1-p]] to a
/// probability vector. Negative entries are kept.
std::vector<double> invert_confusion(const std::vector<double>& probabilities,
                                     const NoiseModel& model);

/// invert_confusion of the empirical frequencies.
std::vector<double> correct(const ShotCounts& counts, const NoiseModel& model);

/// {"shots": int, "flip_rates": [float], "seed": int, "rng": str}.
std::string calibration_report_json(std::uint64_t shots,
                                    const NoiseModel& model,
                                    std::uint64_t seed);

}  // namespace numix
