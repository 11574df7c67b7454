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

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace oppflags {

/// An element of GF(p^k), identified by the base-p digits of its polynomial
/// representative: index = c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Index 0 is zero
/// and index 1 is one.
struct FieldElement {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Exact arithmetic in GF(p^k) with p^k <= 2^16.
///
/// Multiplication runs through exponent/logarithm tables relative to the
/// least primitive element; addition in odd characteristic uses Zech
/// logarithms, in characteristic 2 it is a digit-wise XOR. The modulus is the
/// monic irreducible polynomial of degree k whose coefficient vector
/// (c_0, ..., c_{k-1}) has the smallest base-p encoding. Immutable after
/// construction.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws kNonPrime when p is not prime and kTooLarge when p^k exceeds the cap.
  static FiniteField make(std::uint32_t p, std::uint32_t k);

  /// Builds the field of the given prime-power order; kNonPrime if `q` is not a prime power.
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Coefficients c_0..c_k of the monic modulus (c_k = 1).
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement primitive() const noexcept { return {exp_[1]}; }
  FieldElement element(std::uint32_t index) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    if (p_ == 2) return {a.index ^ b.index};
    if (a.index == 0) return b;
    if (b.index == 0) return a;
    const std::uint32_t la = log_[a.index];
    std::uint32_t d = log_[b.index] + (q_ - 1) - la;
    if (d >= q_ - 1) d -= q_ - 1;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return {0};
    return {exp_[la + z]};
  }
  FieldElement neg(FieldElement a) const noexcept { return {neg_[a.index]}; }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a.index == 0 || b.index == 0) return {0};
    return {exp_[log_[a.index] + log_[b.index]]};
  }
  /// Throws kDivisionByZero on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  /// Negative exponents are allowed for nonzero `a`.
  FieldElement pow(FieldElement a, std::int64_t e) const;

  /// The involution x -> x^{p^{k/2}}; throws kOddDegreeField when k is odd.
  FieldElement conj(FieldElement a) const;

  /// Discrete logarithm to the primitive base; undefined for zero.
  std::uint32_t log(FieldElement a) const noexcept { return log_[a.index]; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(FieldElement a) const;

  /// True when some element squares to `a` (zero included).
  bool is_square(FieldElement a) const noexcept;

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  FiniteField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // size 2(q-1), so exp_[la + lb] needs no reduction
  std::vector<std::uint32_t> log_;   // size q
  std::vector<std::uint32_t> zech_;  // log(1 + g^d) for d in [0, q-1)
  std::vector<std::uint32_t> neg_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace oppflags
