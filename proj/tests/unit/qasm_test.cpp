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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "numix/errors.hpp"
#include "numix/oscillation.hpp"
#include "numix/pmns.hpp"
#include "numix/qasm.hpp"
#include "numix/subrotation.hpp"
#include "oracles.hpp"
#include "random_circuits.hpp"

namespace numix {
namespace {

constexpr std::size_t kFrozenBaseSubrotationN3 = 11;
constexpr std::size_t kFrozenBaseSubrotationN4 = 31;

double dev(const Circuit& a, const Circuit& b) {
  return max_abs_diff(unitary_of(a), unitary_of(b));
}

TEST(Lower, AlreadyLoweredIsUnchanged) {
  Circuit c(3);
  c.append(Gate::u3(0.1, 0.2, 0.3, 0))
      .append(Gate::x(2, {1}))
      .append(Gate::phase(0.4, 1, {0}))
      .append(Gate::u3(0.5, -0.6, 0.7, 2, {0}));
  ASSERT_TRUE(is_lowered(c));
  EXPECT_EQ(lower(c), c);
}

TEST(Lower, DoublyControlledU3IsFiveGates) {
  const double theta = 1.1, phi = 0.4;
  Circuit c(3);
  c.append(Gate::u3(theta, phi, -phi, 2, {0, 1}));
  const Circuit out = lower(c);
  Circuit expected(3);
  expected.append(Gate::u3(theta / 2, phi, -phi, 2, {1}))
      .append(Gate::x(1, {0}))
      .append(Gate::u3(-theta / 2, phi, -phi, 2, {1}))
      .append(Gate::x(1, {0}))
      .append(Gate::u3(theta / 2, phi, -phi, 2, {0}));
  EXPECT_EQ(out, expected);
  EXPECT_LT(dev(out, c), 1e-12);
}

TEST(Lower, ToffoliKeepsGlobalPhase) {
  Circuit c(3);
  c.append(Gate::x(2, {0, 1}));
  const Circuit out = lower(c);
  EXPECT_TRUE(is_lowered(out));
  EXPECT_LT(dev(out, c), 1e-12);
}

TEST(Lower, AnticontrolsAreNegated) {
  Circuit c(2);
  c.append(Gate::u3(0.7, 0.1, -0.1, 1, {}, {0}));
  const Circuit out = lower(c);
  for (const Gate& g : out.gates()) EXPECT_TRUE(g.anticontrols().empty());
  EXPECT_EQ(out.size(), 3u);
  EXPECT_LT(dev(out, c), 1e-12);
}

TEST(Lower, SwapsBecomeCx) {
  Circuit c(3);
  c.append(Gate::swap(0, 2)).append(Gate::swap(0, 1, {2}, {}));
  const Circuit out = lower(c);
  EXPECT_TRUE(is_lowered(out));
  EXPECT_LT(dev(out, c), 1e-12);
}

TEST(Lower, PmnsCircuits) {
  const Circuit p3 = build_circuit(pmns3(0.58, 0.15, 0.86, -1.3));
  EXPECT_LT(dev(lower(p3), p3), 1e-10);
  const Circuit p4 = build_circuit(pmns4({0.58, 0.15, 0.86, 0.1, 0.2, 0.3, 1.0, -0.5, 2.0}));
  EXPECT_LT(dev(lower(p4), p4), 1e-10);
  const Circuit p8 = build_circuit(MixingSpec{8, {{1, 2, 0.3, 0.1}, {3, 7, -0.8, 1.4}}});
  EXPECT_LT(dev(lower(p8), p8), 1e-10);
}

TEST(Lower, RandomCircuitsPreserveUnitaryExactly) {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Circuit c = testing::random_circuit(rng, n, 25);
    const Circuit out = lower(c);
    ASSERT_TRUE(is_lowered(out));
    ASSERT_LT(dev(out, c), 1e-10) << "trial " << trial;
  }
}

TEST(Lower, BaseSubrotationGateCountIsFrozen) {
  // Regression metric: review any growth before changing these numbers.
  const Circuit out = lower(base_subrotation(0.7, 1.1, 3));
  EXPECT_EQ(out.size(), kFrozenBaseSubrotationN3);
  EXPECT_LT(dev(out, base_subrotation(0.7, 1.1, 3)), 1e-10);
  const Circuit out4 = lower(base_subrotation(0.7, 1.1, 4));
  EXPECT_EQ(out4.size(), kFrozenBaseSubrotationN4);
  EXPECT_LT(dev(out4, base_subrotation(0.7, 1.1, 4)), 1e-10);
}

TEST(Emit, EmptyCircuitIsHeaderOnly) {
  EXPECT_EQ(emit_qasm(Circuit(2)),
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n");
}

TEST(Emit, SingleU3HasExactAngles) {
  Circuit c(1);
  c.append(Gate::u3(0.1, -2.5, 3.0000000000000004, 0));
  const std::string text = emit_qasm(c);
  EXPECT_NE(text.find("u3(0.10000000000000001,-2.5,3.0000000000000004) q[0];\n"),
            std::string::npos);
}

TEST(Emit, GateSpellings) {
  Circuit c(2);
  c.append(Gate::x(1))
      .append(Gate::x(1, {0}))
      .append(Gate::phase(0.5, 0, {1}))
      .append(Gate::phase(0.25, 1))
      .append(Gate::u3(1, 2, 3, 0, {1}));
  const std::string text = emit_qasm(c, {.measure = true});
  EXPECT_NE(text.find("x q[1];\n"), std::string::npos);
  EXPECT_NE(text.find("cx q[0],q[1];\n"), std::string::npos);
  EXPECT_NE(text.find("cu1(0.5) q[1],q[0];\n"), std::string::npos);
  EXPECT_NE(text.find("u1(0.25) q[1];\n"), std::string::npos);
  EXPECT_NE(text.find("cu3(1,2,3) q[1],q[0];\n"), std::string::npos);
  EXPECT_NE(text.find("measure q[1] -> c[1];\n"), std::string::npos);
  EXPECT_EQ(emit_qasm(c).find("measure"), std::string::npos);
}

TEST(Emit, UnloweredGateIsNamed) {
  Circuit c(3);
  c.append(Gate::x(2, {0, 1}));
  try {
    emit_qasm(c);
    FAIL() << "expected QasmError";
  } catch (const QasmError& e) {
    EXPECT_NE(std::string(e.what()).find("mcx"), std::string::npos) << e.what();
  }
}

TEST(RoundTrip, LoweredOscillationCircuit) {
  const MixingSpec s = pmns3(0.58, 0.15, 0.86, 1.2);
  const Circuit c = lower(evolution_circuit(
      s, PhaseOperator::from_masses({0, 7.4e-5, 2.5e-3}, 1300.0, 1.3)));
  const ParsedQasm back = parse_qasm(emit_qasm(c, {.measure = true}));
  EXPECT_EQ(back.circuit, c);
  EXPECT_TRUE(back.measured);
}

TEST(RoundTrip, RandomLoweredCircuits) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = lower(testing::random_circuit(rng, 1 + trial % 4, 15));
    ASSERT_EQ(parse_qasm(emit_qasm(c)).circuit, c);
  }
}

TEST(Parse, AcceptsPiExpressionsAndComments) {
  const ParsedQasm p = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n// note\nqreg q[1];\n"
      "U(pi/2, -pi, 2*pi) q[0]; barrier q;\n");
  ASSERT_EQ(p.circuit.size(), 1u);
  EXPECT_EQ(p.circuit.gates()[0],
            Gate::u3(std::numbers::pi / 2, -std::numbers::pi, 2 * std::numbers::pi, 0));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_qasm("qreg q[1];"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[0];"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nx q[3];"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nu1(foo) q[0];"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 3.0;\nqreg q[1];"), QasmError);
}

}  // namespace
}  // namespace numix
