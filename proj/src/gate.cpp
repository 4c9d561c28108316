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

#include "numix/gate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "numix/errors.hpp"

namespace numix {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void normalize(std::vector<Qubit>& qs) {
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
}

bool contains(const std::vector<Qubit>& qs, Qubit q) {
  return std::binary_search(qs.begin(), qs.end(), q);
}

void require_finite(double v) {
  if (!std::isfinite(v)) {
    throw InvalidAngleError("angle must be finite");
  }
}

}  // namespace

Matrix2 u3_matrix(double theta, double phi, double lambda) {
  require_finite(theta);
  require_finite(phi);
  require_finite(lambda);
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Matrix2 m;
  m << c, -s * std::polar(1.0, lambda), s * std::polar(1.0, phi),
      c * std::polar(1.0, phi + lambda);
  return m;
}

Matrix2 pauli_x_matrix() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 phase_matrix(double lambda) {
  require_finite(lambda);
  Matrix2 m;
  m << 1, 0, 0, std::polar(1.0, lambda);
  return m;
}

Gate::Gate(GateKind kind, Qubit target, std::vector<Qubit> controls,
           std::vector<Qubit> anticontrols)
    : kind_(kind),
      target_(target),
      controls_(std::move(controls)),
      anticontrols_(std::move(anticontrols)) {
  normalize(controls_);
  normalize(anticontrols_);
  std::visit(overloaded{
                 [](const U3& g) {
                   require_finite(g.theta);
                   require_finite(g.phi);
                   require_finite(g.lambda);
                 },
                 [](const Phase& g) { require_finite(g.lambda); },
                 [](const PauliX&) {},
                 [this](const Swap& g) {
                   if (g.other == target_) {
                     throw StructuralError("swap of a qubit with itself");
                   }
                   if (contains(controls_, g.other) ||
                       contains(anticontrols_, g.other)) {
                     throw StructuralError(
                         "swap partner qubit is also a control");
                   }
                 },
             },
             kind_);
  if (contains(controls_, target_) || contains(anticontrols_, target_)) {
    throw StructuralError("target qubit " + std::to_string(target_) +
                          " is also a control");
  }
  for (Qubit q : controls_) {
    if (contains(anticontrols_, q)) {
      throw StructuralError("qubit " + std::to_string(q) +
                            " is both control and anticontrol");
    }
  }
}

Gate Gate::u3(double theta, double phi, double lambda, Qubit target,
              std::vector<Qubit> controls, std::vector<Qubit> anticontrols) {
  return Gate(U3{theta, phi, lambda}, target, std::move(controls),
              std::move(anticontrols));
}

Gate Gate::x(Qubit target, std::vector<Qubit> controls,
             std::vector<Qubit> anticontrols) {
  return Gate(PauliX{}, target, std::move(controls), std::move(anticontrols));
}

Gate Gate::phase(double lambda, Qubit target, std::vector<Qubit> controls,
                 std::vector<Qubit> anticontrols) {
  return Gate(Phase{lambda}, target, std::move(controls),
              std::move(anticontrols));
}

Gate Gate::swap(Qubit a, Qubit b, std::vector<Qubit> controls,
                std::vector<Qubit> anticontrols) {
  return Gate(Swap{std::max(a, b)}, std::min(a, b), std::move(controls),
              std::move(anticontrols));
}

Qubit Gate::max_qubit() const {
  Qubit m = target_;
  if (const auto* s = std::get_if<Swap>(&kind_)) m = std::max(m, s->other);
  if (!controls_.empty()) m = std::max(m, controls_.back());
  if (!anticontrols_.empty()) m = std::max(m, anticontrols_.back());
  return m;
}

Matrix2 Gate::target_matrix() const {
  return std::visit(
      overloaded{
          [](const U3& g) { return u3_matrix(g.theta, g.phi, g.lambda); },
          [](const PauliX&) { return pauli_x_matrix(); },
          [](const Phase& g) { return phase_matrix(g.lambda); },
          [](const Swap&) -> Matrix2 {
            throw UnsupportedError("swap has no single-qubit matrix");
          },
      },
      kind_);
}

Gate Gate::inverse() const {
  GateKind inv = std::visit(
      overloaded{
          // U3(t,p,l)^dagger = U3(-t,-l,-p)
          [](const U3& g) -> GateKind { return U3{-g.theta, -g.lambda, -g.phi}; },
          [](const PauliX& g) -> GateKind { return g; },
          [](const Phase& g) -> GateKind { return Phase{-g.lambda}; },
          [](const Swap& g) -> GateKind { return g; },
      },
      kind_);
  return Gate(inv, target_, controls_, anticontrols_);
}

Gate Gate::shifted(Qubit offset) const {
  GateKind k = kind_;
  if (auto* s = std::get_if<Swap>(&k)) s->other += offset;
  std::vector<Qubit> c = controls_;
  std::vector<Qubit> a = anticontrols_;
  for (auto& q : c) q += offset;
  for (auto& q : a) q += offset;
  return Gate(k, target_ + offset, std::move(c), std::move(a));
}

Gate Gate::with_control(Qubit q, bool anti) const {
  std::vector<Qubit> c = controls_;
  std::vector<Qubit> a = anticontrols_;
  (anti ? a : c).push_back(q);
  return Gate(kind_, target_, std::move(c), std::move(a));
}

std::string Gate::name() const {
  std::string base = std::visit(overloaded{
                                    [](const U3&) { return "u3"; },
                                    [](const PauliX&) { return "x"; },
                                    [](const Phase&) { return "u1"; },
                                    [](const Swap&) { return "swap"; },
                                },
                                kind_);
  switch (num_controls()) {
    case 0:
      return base;
    case 1:
      return "c" + base;
    default:
      return "mc" + base;
  }
}

std::string Gate::to_string() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const U3& g) {
                   os << "u3(" << g.theta << "," << g.phi << "," << g.lambda
                      << ")";
                 },
                 [&](const PauliX&) { os << "x"; },
                 [&](const Phase& g) { os << "u1(" << g.lambda << ")"; },
                 [&](const Swap& g) { os << "swap[" << g.other << "]"; },
             },
             kind_);
  os << " q" << target_;
  if (!controls_.empty()) {
    os << " ctrl{";
    for (std::size_t k = 0; k < controls_.size(); ++k) {
      os << (k ? "," : "") << controls_[k];
    }
    os << "}";
  }
  if (!anticontrols_.empty()) {
    os << " actrl{";
    for (std::size_t k = 0; k < anticontrols_.size(); ++k) {
      os << (k ? "," : "") << anticontrols_[k];
    }
    os << "}";
  }
  return os.str();
}

}  // namespace numix
