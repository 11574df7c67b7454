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

#include "oppflags/exact_linalg.hpp"

#include <algorithm>
#include <string>

#include "oppflags/error.hpp"
#include "oppflags/finite_field.hpp"

namespace oppflags {

namespace {

void check_budget(std::size_t rows, std::size_t cols, std::size_t budget) {
  if (rows * cols > budget) {
    throw Error(ErrorCode::kBudgetExceeded, std::to_string(rows) + "x" + std::to_string(cols) +
                                                " exceeds the exact elimination budget of " +
                                                std::to_string(budget) + " entries");
  }
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
  }
  return result;
}

std::uint64_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

}  // namespace

std::size_t rank_exact(const BigMatrix& input, std::size_t budget) {
  check_budget(input.rows(), input.cols(), budget);
  BigMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(piv, k), m(rank, k));
    }
    const BigInt pivot = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        // Bareiss: the division by the previous pivot is exact.
        m(r, k) = (pivot * m(r, k) - factor * m(rank, k)) / prev;
      }
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const RationalMatrix& m, std::size_t budget) {
  check_budget(m.rows(), m.cols(), budget);
  BigMatrix scaled(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (const auto& x : m.row(r)) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      scaled(r, c) = boost::multiprecision::numerator(m(r, c)) * (l / boost::multiprecision::denominator(m(r, c)));
    }
  }
  return rank_exact(scaled, budget);
}

std::size_t rank_exact(const IntMatrix& m, std::size_t budget) {
  check_budget(m.rows(), m.cols(), budget);
  BigMatrix big(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) big(r, c) = m(r, c);
  }
  return rank_exact(big, budget);
}

bool ModularRank::agree() const {
  return std::adjacent_find(ranks.begin(), ranks.end(), std::not_equal_to<>()) == ranks.end();
}

ModularEchelon::ModularEchelon(std::uint32_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_to_row_(cols, -1) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw Error(ErrorCode::kPrimeTooSmall, "modulus " + std::to_string(p) + " must be a prime below 2^28");
  }
}

bool ModularEchelon::insert(std::span<std::uint64_t> row) {
  const std::uint64_t p = p_;
  unsigned pending = 0;  // products accumulated since the last full reduction
  for (std::size_t c = 0; c < cols_; ++c) {
    const std::uint64_t x = row[c] % p;
    row[c] = x;
    if (x == 0) continue;
    const std::int64_t b = pivot_to_row_[c];
    if (b < 0) {
      for (std::size_t k = c + 1; k < cols_; ++k) row[k] %= p;
      const std::uint64_t inv = inv_mod(x, p);
      const std::size_t base = basis_.size();
      basis_.resize(base + cols_, 0);
      basis_[base + c] = 1;
      for (std::size_t k = c + 1; k < cols_; ++k) {
        basis_[base + k] = static_cast<std::uint32_t>(row[k] * inv % p);
      }
      pivot_to_row_[c] = static_cast<std::int64_t>(rank_);
      ++rank_;
      return true;
    }
    if (pending == 255) {
      for (std::size_t k = c + 1; k < cols_; ++k) row[k] %= p;
      pending = 0;
    }
    const std::uint32_t* brow = basis_.data() + static_cast<std::size_t>(b) * cols_;
    const std::uint64_t f = p - x;
    row[c] = 0;
    for (std::size_t k = c + 1; k < cols_; ++k) row[k] += f * brow[k];
    ++pending;
  }
  return false;
}

ModularRank rank_modular(std::size_t rows, std::size_t cols, const RowSource& source,
                         std::span<const std::uint32_t> primes, std::uint64_t entry_bound) {
  ModularRank result;
  std::vector<std::int64_t> buffer(cols);
  std::vector<std::uint64_t> work(cols);
  for (const std::uint32_t p : primes) {
    if (p <= entry_bound) {
      throw Error(ErrorCode::kPrimeTooSmall,
                  "prime " + std::to_string(p) + " does not exceed the bound " + std::to_string(entry_bound));
    }
  }
  std::vector<ModularEchelon> echelons;
  for (const std::uint32_t p : primes) echelons.emplace_back(p, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::fill(buffer.begin(), buffer.end(), 0);
    source(r, buffer);
    for (auto& e : echelons) {
      if (e.rank() == cols) continue;
      for (std::size_t c = 0; c < cols; ++c) work[c] = reduce(buffer[c], e.prime());
      e.insert(work);
    }
  }
  for (const auto& e : echelons) {
    result.primes.push_back(e.prime());
    result.ranks.push_back(e.rank());
    result.value = std::max(result.value, e.rank());
  }
  return result;
}

ModularRank rank_modular(const IntMatrix& m, std::span<const std::uint32_t> primes, std::uint64_t entry_bound) {
  return rank_modular(
      m.rows(), m.cols(),
      [&m](std::size_t r, std::span<std::int64_t> out) { std::copy(m.row(r).begin(), m.row(r).end(), out.begin()); },
      primes, entry_bound);
}

NullityResult nullity_for_eigenvalue(const NeighborFn& neighbors, std::size_t dim, std::int64_t lambda,
                                     std::span<const std::uint32_t> primes, std::size_t budget) {
  if (dim > budget) {
    throw Error(ErrorCode::kBudgetExceeded, std::to_string(dim) + " vertices exceed the dense nullity budget of " +
                                                std::to_string(budget));
  }
  std::vector<std::uint32_t> nb;
  const auto source = [&](std::size_t r, std::span<std::int64_t> out) {
    nb.clear();
    neighbors(r, nb);
    for (const auto v : nb) out[v] += 1;
    out[r] -= lambda;
  };
  std::uint64_t bound = 0;
  for (std::size_t v = 0; v < std::min<std::size_t>(dim, 1); ++v) {
    nb.clear();
    neighbors(v, nb);
    bound = 2 * (nb.size() + static_cast<std::uint64_t>(lambda < 0 ? -lambda : lambda));
  }
  NullityResult result;
  result.rank = rank_modular(dim, dim, source, primes, bound);
  if (!result.rank.agree()) {
    std::string detail;
    for (std::size_t i = 0; i < result.rank.ranks.size(); ++i) {
      detail += " rank mod " + std::to_string(result.rank.primes[i]) + " = " + std::to_string(result.rank.ranks[i]);
    }
    throw Error(ErrorCode::kPrimeDisagreement, "nullity at lambda = " + std::to_string(lambda) + ":" + detail);
  }
  result.value = dim - result.rank.value;
  return result;
}

}  // namespace oppflags
