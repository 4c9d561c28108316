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

#include "numix/shots.hpp"

#include <cmath>
#include <random>
#include <string>

#include <json.hpp>

#include "numix/errors.hpp"

namespace numix {

namespace {

// Stream ids keep sampling and noise draws independent under one seed.
constexpr std::uint64_t kSampleStream = 0x5a4d;
constexpr std::uint64_t kNoiseStream = 0x4e01;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::size_t qubits_for(std::size_t len) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  if ((std::size_t{1} << n) != len || n == 0) {
    throw StructuralError("distribution length must be a power of two >= 2");
  }
  return n;
}

// Applies the 2x2 matrix [[a, b], [b, a]] along qubit q of a 2^n vector.
void apply_symmetric(std::vector<double>& v, std::size_t n, std::size_t q,
                     double a, double b) {
  const std::size_t bit = std::size_t{1} << (n - 1 - q);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k & bit) continue;
    const double x0 = v[k];
    const double x1 = v[k | bit];
    v[k] = a * x0 + b * x1;
    v[k | bit] = b * x0 + a * x1;
  }
}

void check_width(const NoiseModel& model, std::size_t n) {
  if (model.n_qubits() != n) {
    throw InvalidConfigError("noise model has " +
                             std::to_string(model.n_qubits()) +
                             " rates for a " + std::to_string(n) +
                             "-qubit register");
  }
}

}  // namespace

NoiseModel::NoiseModel(std::vector<double> per_qubit_flip)
    : flip_(std::move(per_qubit_flip)) {
  for (double p : flip_) {
    if (!(p >= 0.0 && p < 0.5)) {
      throw InvalidConfigError("flip rate " + std::to_string(p) +
                               " outside [0, 0.5)");
    }
  }
}

std::vector<double> ShotCounts::frequencies() const {
  if (shots == 0) throw InvalidConfigError("no shots recorded");
  std::vector<double> f(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    f[k] = static_cast<double>(counts[k]) / static_cast<double>(shots);
  }
  return f;
}

ShotCounts sample(const StateVector& state, std::uint64_t shots,
                  std::uint64_t seed) {
  const std::size_t n = qubits_for(static_cast<std::size_t>(state.size()));
  if (std::abs(state.squaredNorm() - 1.0) > 1e-9) {
    throw InvalidConfigError("state is not normalized");
  }
  std::vector<double> weights(static_cast<std::size_t>(state.size()));
  for (Eigen::Index k = 0; k < state.size(); ++k) {
    weights[static_cast<std::size_t>(k)] = std::norm(state[k]);
  }
  std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
  auto rng = make_rng(seed, kSampleStream);
  ShotCounts out{n, shots, std::vector<std::uint64_t>(weights.size(), 0)};
  for (std::uint64_t s = 0; s < shots; ++s) ++out.counts[dist(rng)];
  return out;
}

ShotCounts apply_readout_noise(const ShotCounts& counts,
                               const NoiseModel& model, std::uint64_t seed) {
  check_width(model, counts.n_qubits);
  auto rng = make_rng(seed, kNoiseStream);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ShotCounts out{counts.n_qubits, counts.shots,
                 std::vector<std::uint64_t>(counts.counts.size(), 0)};
  const std::size_t n = counts.n_qubits;
  for (std::size_t k = 0; k < counts.counts.size(); ++k) {
    for (std::uint64_t s = 0; s < counts.counts[k]; ++s) {
      std::size_t read = k;
      for (std::size_t q = 0; q < n; ++q) {
        if (unit(rng) < model.flip_rates()[q]) {
          read ^= std::size_t{1} << (n - 1 - q);
        }
      }
      ++out.counts[read];
    }
  }
  return out;
}

NoiseModel calibrate(const ShotCounts& zero_distance_counts,
                     std::size_t true_state) {
  const auto& c = zero_distance_counts;
  if (c.shots == 0) throw InvalidConfigError("calibration needs shots > 0");
  if (true_state >= c.counts.size()) {
    throw StructuralError("calibration state out of range");
  }
  const std::size_t n = c.n_qubits;
  std::vector<double> rates(n, 0.0);
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    std::uint64_t disagree = 0;
    for (std::size_t k = 0; k < c.counts.size(); ++k) {
      if ((k & bit) != (true_state & bit)) disagree += c.counts[k];
    }
    rates[q] = static_cast<double>(disagree) / static_cast<double>(c.shots);
  }
  return NoiseModel(std::move(rates));
}

std::vector<double> apply_confusion(const std::vector<double>& probabilities,
                                    const NoiseModel& model) {
  const std::size_t n = qubits_for(probabilities.size());
  check_width(model, n);
  std::vector<double> v = probabilities;
  for (std::size_t q = 0; q < n; ++q) {
    const double p = model.flip_rates()[q];
    apply_symmetric(v, n, q, 1.0 - p, p);
  }
  return v;
}

std::vector<double> invert_confusion(const std::vector<double>& probabilities,
                                     const NoiseModel& model) {
  const std::size_t n = qubits_for(probabilities.size());
  check_width(model, n);
  std::vector<double> v = probabilities;
  for (std::size_t q = 0; q < n; ++q) {
    const double p = model.flip_rates()[q];
    const double scale = 1.0 / (1.0 - 2.0 * p);
    apply_symmetric(v, n, q, (1.0 - p) * scale, -p * scale);
  }
  return v;
}

std::vector<double> correct(const ShotCounts& counts, const NoiseModel& model) {
  return invert_confusion(counts.frequencies(), model);
}

std::string calibration_report_json(std::uint64_t shots,
                                    const NoiseModel& model,
                                    std::uint64_t seed) {
  nlohmann::json doc;
  doc["shots"] = shots;
  doc["flip_rates"] = model.flip_rates();
  doc["seed"] = seed;
  doc["rng"] = kRngAlgorithm;
  return doc.dump(2);
}

}  // namespace numix
