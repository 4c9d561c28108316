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

#include "numix/pmns.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "numix/errors.hpp"
#include "numix/subrotation.hpp"

namespace numix {

void MixingSpec::validate() const {
  if (n_flavors < 2 || n_flavors > 1024) {
    throw StructuralError("n_flavors must be in [2, 1024], got " +
                          std::to_string(n_flavors));
  }
  for (const Rotation& r : rotations) {
    if (r.i < 1 || r.i >= r.j || r.j > n_flavors) {
      throw StructuralError("rotation (" + std::to_string(r.i) + "," +
                            std::to_string(r.j) + ") violates 1 <= i < j <= " +
                            std::to_string(n_flavors));
    }
    if (!std::isfinite(r.theta) || !std::isfinite(r.delta)) {
      throw InvalidAngleError("rotation angles must be finite");
    }
  }
}

std::size_t MixingSpec::n_qubits() const {
  std::size_t n = 1;
  while ((std::size_t{1} << n) < n_flavors) ++n;
  return n;
}

FlavorBasisMap FlavorBasisMap::standard(std::size_t n_flavors,
                                        std::size_t dim) {
  static const char* kActive[] = {"e", "mu", "tau"};
  FlavorBasisMap map;
  for (std::size_t k = 0; k < dim; ++k) {
    if (k >= n_flavors) {
      map.labels.push_back("sterile" + std::to_string(k + 1));
    } else if (k < 3) {
      map.labels.emplace_back(kActive[k]);
    } else if (k == 3) {
      map.labels.emplace_back("s");
    } else {
      map.labels.push_back("s" + std::to_string(k - 2));
    }
  }
  return map;
}

const std::string& FlavorBasisMap::label(std::size_t state) const {
  if (state < 1 || state > labels.size()) {
    throw StructuralError("no flavor label for state " + std::to_string(state));
  }
  return labels[state - 1];
}

MixingSpec pmns3(double theta12, double theta13, double theta23,
                 double delta_cp) {
  return {3, {{2, 3, theta23, 0.0}, {1, 3, theta13, delta_cp}, {1, 2, theta12, 0.0}}};
}

MixingSpec pmns4(const Pmns4Angles& a) {
  return {4,
          {{3, 4, a.theta34, 0.0},
           {2, 4, a.theta24, a.delta24},
           {1, 4, a.theta14, a.delta14},
           {2, 3, a.theta23, 0.0},
           {1, 3, a.theta13, a.delta_cp},
           {1, 2, a.theta12, 0.0}}};
}

Circuit build_circuit(const MixingSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n_qubits();
  Circuit out(n);
  for (auto it = spec.rotations.rbegin(); it != spec.rotations.rend(); ++it) {
    const SubRotation s{it->i, it->j, it->theta, it->delta, n};
    out.append(n == 2 ? subrotation_2q_closed_form(s) : subrotation(s));
  }
  return out;
}

UnitaryMatrix matrix_of(const MixingSpec& spec) {
  spec.validate();
  const auto dim = static_cast<Eigen::Index>(spec.n_flavors);
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  for (const Rotation& r : spec.rotations) {
    const auto a = static_cast<Eigen::Index>(r.i - 1);
    const auto b = static_cast<Eigen::Index>(r.j - 1);
    const double c = std::cos(r.theta);
    const double s = std::sin(r.theta);
    UnitaryMatrix f = UnitaryMatrix::Identity(dim, dim);
    f(a, a) = c;
    f(a, b) = s * std::polar(1.0, -r.delta);
    f(b, a) = -s * std::polar(1.0, r.delta);
    f(b, b) = c;
    u = u * f;
  }
  return u;
}

MixingSpec spec_from_degrees(MixingSpec spec) {
  constexpr double kDeg = std::numbers::pi / 180.0;
  for (Rotation& r : spec.rotations) {
    r.theta *= kDeg;
    r.delta *= kDeg;
  }
  return spec;
}

MixingSpec mixing_spec_from_json(const std::string& text) {
  using nlohmann::json;
  MixingSpec spec;
  try {
    const json doc = json::parse(text);
    const auto n = doc.at("n_flavors").get<long long>();
    if (n < 2) throw StructuralError("n_flavors must be at least 2");
    spec.n_flavors = static_cast<std::size_t>(n);
    for (const json& r : doc.at("rotations")) {
      const auto i = r.at("i").get<long long>();
      const auto j = r.at("j").get<long long>();
      if (i < 1 || j < 1) throw StructuralError("rotation indices must be >= 1");
      spec.rotations.push_back({static_cast<std::size_t>(i),
                                static_cast<std::size_t>(j),
                                r.at("theta").get<double>(),
                                r.value("delta", 0.0)});
    }
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed mixing spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string mixing_spec_to_json(const MixingSpec& spec) {
  nlohmann::json doc;
  doc["n_flavors"] = spec.n_flavors;
  doc["rotations"] = nlohmann::json::array();
  for (const Rotation& r : spec.rotations) {
    doc["rotations"].push_back(
        {{"i", r.i}, {"j", r.j}, {"theta", r.theta}, {"delta", r.delta}});
  }
  return doc.dump(2);
}

}  // namespace numix
