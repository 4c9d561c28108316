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

#include "numix/errors.hpp"
#include "numix/permutation.hpp"
#include "oracles.hpp"

namespace numix {
namespace {

TEST(AdjacentTransposition, SingleQubitIsX) {
  Circuit expected(1);
  expected.append(Gate::x(0));
  EXPECT_EQ(adjacent_transposition(1, 1), expected);
}

TEST(AdjacentTransposition, ClassTwoOnTwoQubitsIsCx) {
  Circuit expected(2);
  expected.append(Gate::x(1, {0}));
  EXPECT_EQ(adjacent_transposition(3, 2), expected);
}

TEST(AdjacentTransposition, ClassOneOnTwoQubitsIsAnticontrolledX) {
  Circuit expected(2);
  expected.append(Gate::x(1, {}, {0}));
  EXPECT_EQ(adjacent_transposition(1, 2), expected);
}

TEST(AdjacentTransposition, ClassThreeOnTwoQubitsIsThreeCx) {
  Circuit expected(2);
  expected.append(Gate::x(1, {0})).append(Gate::x(0, {1})).append(
      Gate::x(1, {0}));
  const Circuit c = adjacent_transposition(2, 2);
  EXPECT_EQ(c, expected);
  EXPECT_LT(oracle::max_abs(unitary_of(c), oracle::transposition(2, 3, 4)),
            1e-15);
}

TEST(AdjacentTransposition, OutOfRange) {
  EXPECT_THROW(adjacent_transposition(0, 2), StructuralError);
  EXPECT_THROW(adjacent_transposition(4, 2), StructuralError);
}

TEST(GeneralTransposition, MatchesDirectMatrixExample) {
  const Circuit c = general_transposition({1, 4, 3});
  EXPECT_LT(oracle::max_abs(unitary_of(c), oracle::transposition(1, 4, 8)),
            1e-12);
}

TEST(GeneralTransposition, SwapOnTwoQubits) {
  EXPECT_LT(oracle::max_abs(unitary_of(general_transposition({2, 3, 2})),
                            embed(Gate::swap(0, 1), 2)),
            1e-15);
}

TEST(GeneralTransposition, InvalidPairs) {
  EXPECT_THROW(general_transposition({2, 2, 2}), StructuralError);
  EXPECT_THROW(general_transposition({3, 2, 2}), StructuralError);
  EXPECT_THROW(general_transposition({1, 5, 2}), StructuralError);
  EXPECT_THROW(general_transposition({0, 1, 2}), StructuralError);
}

TEST(GeneralTransposition, ExhaustiveUpToFourQubits) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = i + 1; j <= dim; ++j) {
        const Circuit c = general_transposition({i, j, n});
        const UnitaryMatrix u = unitary_of(c);
        // 0/1 entries
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
          for (Eigen::Index k = 0; k < u.cols(); ++k) {
            const double v = std::abs(u(r, k));
            ASSERT_TRUE(v < 1e-12 || std::abs(v - 1.0) < 1e-12);
          }
        }
        ASSERT_LT(oracle::max_abs(u, oracle::transposition(i, j, dim)), 1e-12)
            << "(" << i << " " << j << "; " << n << ")";
        Circuit twice(n);
        twice.append(c).append(c);
        ASSERT_LT(oracle::max_abs(unitary_of(twice), oracle::identity(dim)),
                  1e-12);
        for (const Gate& g : c.gates()) {
          ASSERT_TRUE(std::holds_alternative<PauliX>(g.kind())) << g.to_string();
        }
      }
    }
  }
}

TEST(TranspositionCircuit, EqualIndicesAreEmpty) {
  EXPECT_TRUE(transposition_circuit(4, 4, 2).empty());
  EXPECT_THROW(transposition_circuit(5, 5, 2), StructuralError);
  EXPECT_EQ(transposition_circuit(3, 1, 2), general_transposition({1, 3, 2}));
}

}  // namespace
}  // namespace numix
