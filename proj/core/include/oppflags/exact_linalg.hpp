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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oppflags/qpower.hpp"

namespace oppflags {

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<std::int64_t>;
using BigMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<Rational>;

// Below 2^28 so that 256 products of residues fit in a 64-bit accumulator.
inline constexpr std::uint32_t kPrimeA = 268435399u;
inline constexpr std::uint32_t kPrimeB = 268435367u;
inline constexpr std::uint32_t kMaxPrime = 1u << 28;
inline constexpr std::uint32_t kDefaultPrimes[] = {kPrimeA, kPrimeB};

/// Default cap on rows*cols for fraction-free elimination.
inline constexpr std::size_t kExactBudget = 200000;
/// Default cap on the vertex count of a dense nullity computation.
inline constexpr std::size_t kNullityBudget = 4000;

/// Rank over Q by Bareiss elimination; kBudgetExceeded past `budget` entries.
std::size_t rank_exact(const BigMatrix& m, std::size_t budget = kExactBudget);
std::size_t rank_exact(const RationalMatrix& m, std::size_t budget = kExactBudget);
std::size_t rank_exact(const IntMatrix& m, std::size_t budget = kExactBudget);

struct ModularRank {
  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> ranks;
  /// Maximum over primes; a lower bound for the rank over Q.
  std::size_t value = 0;

  bool agree() const;
};

/// Writes row `r` of an integer matrix into `out`.
using RowSource = std::function<void(std::size_t r, std::span<std::int64_t> out)>;

/// Rank modulo each prime. `entry_bound` is a bound on |entries| times the
/// relevant dimension; every prime must exceed it or kPrimeTooSmall is thrown.
ModularRank rank_modular(std::size_t rows, std::size_t cols, const RowSource& source,
                         std::span<const std::uint32_t> primes, std::uint64_t entry_bound = 0);
ModularRank rank_modular(const IntMatrix& m, std::span<const std::uint32_t> primes,
                         std::uint64_t entry_bound = 0);

/// Row echelon basis modulo a prime, fed one row at a time.
class ModularEchelon {
 public:
  /// `p` must be a prime below kMaxPrime.
  ModularEchelon(std::uint32_t p, std::size_t cols);

  /// Reduces `row` (entries already in [0, p)) against the basis and keeps it
  /// when independent. Returns true when the rank grew. `row` is clobbered.
  bool insert(std::span<std::uint64_t> row);

  std::size_t rank() const noexcept { return rank_; }
  std::uint32_t prime() const noexcept { return p_; }

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> basis_;         // rank_ rows of cols_ residues, pivot entry 1
  std::vector<std::int64_t> pivot_to_row_;   // -1 when the column has no pivot
};

using NeighborFn = std::function<void(std::size_t vertex, std::vector<std::uint32_t>& out)>;

struct NullityResult {
  std::size_t value = 0;
  ModularRank rank;
};

/// dim - rank(A - lambda I) where row v of A has ones at `neighbors(v)`.
/// Throws kBudgetExceeded above `budget` vertices and kPrimeDisagreement when
/// the primes give different ranks.
NullityResult nullity_for_eigenvalue(const NeighborFn& neighbors, std::size_t dim, std::int64_t lambda,
                                     std::span<const std::uint32_t> primes = kDefaultPrimes,
                                     std::size_t budget = kNullityBudget);

}  // namespace oppflags
