// Copyright 2026 The oppflags Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <oppflags/error.hpp>
#include <oppflags/exact_linalg.hpp>

#include "fixtures.hpp"

namespace oppflags {
namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3);
  IntMatrix a(rows, rank);
  IntMatrix b(rank, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < rank; ++k) a(i, k) = small(rng);
  }
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = small(rng);
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < rank; ++k) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

TEST(RankExact, TrivialMatrices) {
  for (std::size_t k : {1u, 4u, 9u}) {
    IntMatrix id(k, k);
    for (std::size_t i = 0; i < k; ++i) id(i, i) = 1;
    EXPECT_EQ(rank_exact(id), k);
    EXPECT_EQ(rank_exact(IntMatrix(k, k + 2, 1)), 1u);
  }
  EXPECT_EQ(rank_exact(IntMatrix(3, 5, 0)), 0u);
}

TEST(RankExact, RationalEntries) {
  RationalMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(3, 2);
  m(1, 1) = Rational(1);
  EXPECT_EQ(rank_exact(m), 1u);
  m(1, 1) = Rational(2);
  EXPECT_EQ(rank_exact(m), 2u);
}

TEST(RankExact, PointSchemeIdempotentOfProjectiveSpace) {
  // 15 E_1 = 15 I - J on the points of PG(3,2).
  IntMatrix e1(15, 15, -1);
  for (std::size_t i = 0; i < 15; ++i) e1(i, i) = 14;
  EXPECT_EQ(rank_exact(e1), 14u);
}

TEST(RankExact, Budget) {
  try {
    rank_exact(IntMatrix(10, 10), 50);
    FAIL() << "budget ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(RankModular, PerPrimeValues) {
  IntMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 4;
  const std::uint32_t primes[] = {2, 5};
  const auto r = rank_modular(d, primes);
  EXPECT_EQ(r.ranks, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.value, 2u);
  EXPECT_FALSE(r.agree());
}

TEST(RankModular, RejectsBadModuli) {
  IntMatrix m(1, 1, 1);
  const std::uint32_t composite[] = {15};
  EXPECT_THROW(rank_modular(m, composite), Error);
  const std::uint32_t small[] = {7};
  try {
    rank_modular(m, small, 10);
    FAIL() << "entry bound ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrimeTooSmall);
  }
}

TEST(RankModular, AgreesWithExactAndTranspose) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t rows = 6 + seed % 5;
    const std::size_t cols = 5 + seed % 7;
    const std::size_t rank = 1 + seed % std::min(rows, cols);
    const auto m = random_matrix(rows, cols, rank, seed);
    const auto exact = rank_exact(m);
    EXPECT_EQ(rank_exact(m.transposed()), exact);
    const auto modular = rank_modular(m, kDefaultPrimes);
    EXPECT_TRUE(modular.agree());
    EXPECT_EQ(modular.value, exact);
    EXPECT_EQ(rank_modular(m.transposed(), kDefaultPrimes).value, exact);
  }
}

TEST(RankModular, InvariantUnderPermutationAndScaling) {
  const auto m = random_matrix(9, 8, 5, 99);
  IntMatrix p(9, 8);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 8; ++j) p(i, j) = 3 * m((i + 4) % 9, (j * 3) % 8);
  }
  EXPECT_EQ(rank_exact(p), rank_exact(m));
  EXPECT_EQ(rank_modular(p, kDefaultPrimes).value, rank_modular(m, kDefaultPrimes).value);
}

TEST(ModularEchelon, InsertReportsGrowth) {
  ModularEchelon e(7, 3);
  std::vector<std::uint64_t> a = {1, 2, 3};
  std::vector<std::uint64_t> b = {2, 4, 6};
  std::vector<std::uint64_t> c = {0, 0, 1};
  EXPECT_TRUE(e.insert(a));
  EXPECT_FALSE(e.insert(b));
  EXPECT_TRUE(e.insert(c));
  EXPECT_EQ(e.rank(), 2u);
}

NeighborFn complete_graph(std::size_t v) {
  return [v](std::size_t x, std::vector<std::uint32_t>& out) {
    for (std::size_t y = 0; y < v; ++y) {
      if (y != x) out.push_back(static_cast<std::uint32_t>(y));
    }
  };
}

TEST(Nullity, CompleteGraphs) {
  for (std::size_t v : {5u, 15u}) {
    EXPECT_EQ(nullity_for_eigenvalue(complete_graph(v), v, -1).value, v - 1);
    EXPECT_EQ(nullity_for_eigenvalue(complete_graph(v), v, static_cast<std::int64_t>(v) - 1).value, 1u);
    EXPECT_EQ(nullity_for_eigenvalue(complete_graph(v), v, 2).value, 0u);
  }
}

TEST(Nullity, OppositionGraphsMatchOracle) {
  const auto& a = testing::load("A:3:2").inst;
  const auto nb = [&a](std::size_t c, std::vector<std::uint32_t>& out) { a.opposite_flags(c, out); };
  const auto r = nullity_for_eigenvalue(nb, a.num_flags(), -16);
  EXPECT_EQ(r.value, 28u);
  EXPECT_EQ(r.rank.ranks, (std::vector<std::size_t>{287, 287}));
  const auto& w = testing::load("B:2:2:2:sp").inst;
  const auto wb = [&w](std::size_t c, std::vector<std::uint32_t>& out) { w.opposite_flags(c, out); };
  EXPECT_EQ(nullity_for_eigenvalue(wb, w.num_flags(), -4).value, 18u);
}

TEST(Nullity, Budget) {
  try {
    nullity_for_eigenvalue(complete_graph(20), 20, -1, kDefaultPrimes, 10);
    FAIL() << "budget ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

}  // namespace
}  // namespace oppflags
