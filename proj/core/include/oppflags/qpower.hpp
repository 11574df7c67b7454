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

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace oppflags {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A multiple of 1/2, stored as twice its value so that e in {0, 1/2, 1, 3/2, 2} stays exact.
struct HalfInt {
  std::int64_t twice = 0;

  static constexpr HalfInt whole(std::int64_t v) { return {2 * v}; }
  static constexpr HalfInt halves(std::int64_t t) { return {t}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
  constexpr HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
  constexpr HalfInt operator-() const { return {-twice}; }
  constexpr HalfInt operator*(std::int64_t k) const { return {twice * k}; }
  friend constexpr HalfInt operator+(HalfInt a, std::int64_t b) { return {a.twice + 2 * b}; }
  friend constexpr HalfInt operator+(std::int64_t b, HalfInt a) { return {a.twice + 2 * b}; }
  friend constexpr HalfInt operator-(HalfInt a, std::int64_t b) { return {a.twice - 2 * b}; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return {a.twice * k}; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string to_string() const;
};

/// Powers of the field order q, with q^x for half-integer x read as q0^{2x} when q = q0^2.
class QPower {
 public:
  explicit QPower(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  /// Square root of q, or 0 when q is not a perfect square.
  std::uint32_t root() const noexcept { return root_; }

  /// Throws kNonSquareFieldForHalfIntegerE for half-integer x over a non-square q.
  Rational pow(HalfInt x) const;
  Rational pow(std::int64_t x) const { return pow(HalfInt::whole(x)); }

 private:
  std::uint32_t q_;
  std::uint32_t root_;
};

BigInt ipow(std::uint64_t base, std::uint64_t exp);

/// Throws kNonIntegerResult when `r` has a nontrivial denominator.
BigInt to_integer(const Rational& r, const char* what);

/// Throws kNonIntegerResult unless `v` fits in int64.
std::int64_t to_int64(const BigInt& v, const char* what);

}  // namespace oppflags
