// Copyright 2026 The cpgraph Authors
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

#include <algorithm>
#include <random>

#include "cpgraph/error.hpp"
#include "cpgraph/linalg.hpp"
#include "cpgraph/oracle.hpp"
#include "cpgraph/reduction.hpp"
#include "test_util.hpp"

namespace cpgraph {
namespace {

using testing::kind_of;

const IntMatrix kSwap{{0, 1}, {1, 0}};
const IntMatrix kPathP3{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};

IntMatrix random_symmetric(std::size_t n, std::mt19937_64& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = entry(rng);
  return a;
}

IntMatrix random_unimodular_upper(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = entry(rng);
  return u;
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(all_pairs_distances(testing::load_graph("threektrees_G1.txt"))), -8);
  EXPECT_EQ(determinant(kSwap), -1);
  EXPECT_EQ(determinant(weighted_path_matrix(5)), -6);
  EXPECT_EQ(determinant(IntMatrix()), 1);
  EXPECT_EQ(determinant(IntMatrix{{7}}), 7);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Determinant, NeedsRowSwaps) {
  const IntMatrix a{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(determinant(a), -1);
  const IntMatrix b{{0, 2, 3}, {0, 0, 5}, {7, 1, 1}};
  EXPECT_EQ(determinant(b), oracle::determinant(b));
}

TEST(Determinant, LargeEntriesStayExact) {
  IntMatrix a(3);
  const BigInt big = BigInt(1) << 100;
  a(0, 0) = big;
  a(1, 1) = big;
  a(2, 2) = 3;
  a(0, 1) = a(1, 0) = 1;
  EXPECT_EQ(determinant(a), 3 * (big * big - 1));
}

TEST(Determinant, AgreesWithLaplaceOnRandomMatrices) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_symmetric(1 + static_cast<std::size_t>(i % 7), rng);
    ASSERT_EQ(determinant(a), oracle::determinant(a)) << to_string(a);
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia_congruence(kSwap), (Inertia{1, 1, 0}));
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(inertia_congruence(weighted_path_matrix(n)), (Inertia{0, static_cast<std::size_t>(n), 0}));
  }
  EXPECT_EQ(inertia_congruence(all_pairs_distances(build_cp_graph(testing::g1_member()))), (Inertia{1, 7, 0}));
  EXPECT_EQ(oracle::inertia(all_pairs_distances(build_cp_graph(testing::g1_member()))), (Inertia{1, 7, 0}));
  EXPECT_EQ(inertia_congruence(IntMatrix(3)), (Inertia{0, 0, 3}));
  EXPECT_EQ(inertia_congruence(IntMatrix()), (Inertia{0, 0, 0}));
  EXPECT_EQ(kind_of([] { inertia_congruence(IntMatrix{{0, 1}, {2, 0}}); }), ErrorKind::NotSymmetric);
}

TEST(Inertia, ZeroDiagonalRepair) {
  // every diagonal entry zero at the first step and again after one pivot
  const IntMatrix a{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, 3, 0}};
  EXPECT_EQ(inertia_congruence(a), (Inertia{2, 2, 0}));
  const IntMatrix b{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}};
  EXPECT_EQ(inertia_congruence(b), (Inertia{1, 1, 1}));
}

TEST(Inertia, AgreesWithCharacteristicPolynomial) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 300; ++i) {
    // narrow entry ranges produce many singular and zero-diagonal cases
    const int range = i % 3 == 0 ? 1 : 5;
    const auto a = random_symmetric(1 + static_cast<std::size_t>(i % 7), rng, -range, range);
    ASSERT_EQ(inertia_congruence(a), oracle::inertia(a)) << to_string(a);
  }
}

TEST(Inertia, InvariantUnderUnimodularCongruence) {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 150; ++i) {
    const auto n = 1 + static_cast<std::size_t>(i % 7);
    const auto a = random_symmetric(n, rng);
    const auto u = random_unimodular_upper(n, rng);
    const auto c = u.transposed() * a * u;
    EXPECT_EQ(determinant(u), 1);
    EXPECT_EQ(determinant(c), determinant(a));
    EXPECT_EQ(inertia_congruence(c), inertia_congruence(a));
  }
}

TEST(LeadingMinors, Examples) {
  EXPECT_EQ(leading_principal_minors(kSwap), (std::vector<BigInt>{0, -1}));
  EXPECT_EQ(inertia_leading_minors(kSwap), (Inertia{1, 1, 0}));
  EXPECT_EQ(leading_principal_minors(weighted_path_matrix(3)), (std::vector<BigInt>{-2, 3, -4}));
  EXPECT_EQ(inertia_leading_minors(weighted_path_matrix(3)), (Inertia{0, 3, 0}));
  EXPECT_EQ(leading_principal_minors(kPathP3), (std::vector<BigInt>{0, -1, 4}));
  EXPECT_EQ(inertia_leading_minors(kPathP3), (Inertia{1, 2, 0}));
  EXPECT_EQ(inertia_leading_minors(kPathP3), inertia_congruence(kPathP3));
}

TEST(LeadingMinors, Preconditions) {
  EXPECT_EQ(kind_of([] { inertia_leading_minors(IntMatrix{{1, 1}, {1, 1}}); }), ErrorKind::Singular);
  const IntMatrix zeros{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};  // D_1 = D_2 = 0
  ASSERT_NE(determinant(zeros), 0);
  EXPECT_EQ(kind_of([&] { inertia_leading_minors(zeros); }), ErrorKind::ConsecutiveZeroMinors);
  EXPECT_EQ(kind_of([] { inertia_leading_minors(IntMatrix{{0, 1}, {2, 0}}); }), ErrorKind::NotSymmetric);
}

TEST(LeadingMinors, AgreeWithCongruenceWhenApplicable) {
  std::mt19937_64 rng(404);
  int used = 0;
  for (int i = 0; i < 300; ++i) {
    const auto a = random_symmetric(1 + static_cast<std::size_t>(i % 7), rng);
    try {
      const auto jones = inertia_leading_minors(a);
      ++used;
      ASSERT_EQ(jones, inertia_congruence(a)) << to_string(a);
    } catch (const Error& e) {
      ASSERT_TRUE(e.kind() == ErrorKind::Singular || e.kind() == ErrorKind::ConsecutiveZeroMinors);
    }
  }
  EXPECT_GT(used, 200);
}

TEST(CofactorSum, Examples) {
  EXPECT_EQ(cofactor_sum(kSwap), -2);
  EXPECT_EQ(cofactor_sum(kPathP3), 4);
  EXPECT_EQ(oracle::cofactor_sum(kPathP3), 4);
  const auto spec = CliquePathSpec{{3, 3, 3, 3}};
  for (const auto& ns : enumerate_neighborhood_sequences(expand_clique_path_spec(spec))) {
    EXPECT_EQ(cofactor_sum(all_pairs_distances(build_cp_graph(ns))), -6);
  }
}

TEST(CofactorSum, AgreesWithNaiveExpansion) {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 150; ++i) {
    const auto a = random_symmetric(1 + static_cast<std::size_t>(i % 6), rng);
    ASSERT_EQ(cofactor_sum(a), oracle::cofactor_sum(a)) << to_string(a);
  }
}

TEST(CofactorSum, InvariantUnderSimultaneousPermutation) {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 100; ++i) {
    const auto n = 1 + static_cast<std::size_t>(i % 7);
    const auto a = random_symmetric(n, rng);
    std::vector<std::size_t> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = k;
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(cofactor_sum(a.permuted(p)), cofactor_sum(a));
  }
}

TEST(ReducedCofactorSum, Examples) {
  EXPECT_EQ(reduced_cofactor_sum(kSwap), -2);
  EXPECT_EQ(reduced_cofactor_sum(reduced_graph(expand_clique_path_spec({{3, 3, 3, 3}})).adjacency_matrix()), -6);
  EXPECT_EQ(reduced_cofactor_sum(reduced_graph(expand_clique_path_spec({{3, 4, 3, 4}})).adjacency_matrix()), -8);
  EXPECT_EQ(kind_of([] { reduced_cofactor_sum(IntMatrix{{1}}); }), ErrorKind::DimensionTooSmall);
}

TEST(Sign, Values) {
  EXPECT_EQ(sign(BigInt(-4)), -1);
  EXPECT_EQ(sign(BigInt(0)), 0);
  EXPECT_EQ(sign(BigInt(9)), 1);
}

}  // namespace
}  // namespace cpgraph
