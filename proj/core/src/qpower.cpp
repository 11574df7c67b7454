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

#include "oppflags/qpower.hpp"

#include <cmath>
#include <limits>

#include "oppflags/error.hpp"

namespace oppflags {

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

QPower::QPower(std::uint32_t q) : q_(q), root_(0) {
  if (q < 2) throw Error(ErrorCode::kInadmissibleParameters, "q must be at least 2");
  auto r = static_cast<std::uint32_t>(std::lround(std::sqrt(static_cast<double>(q))));
  for (std::uint32_t c = r > 0 ? r - 1 : 0; c <= r + 1; ++c) {
    if (c * c == q) root_ = c;
  }
}

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

Rational QPower::pow(HalfInt x) const {
  std::uint64_t base = q_;
  std::int64_t e = x.twice / 2;
  if (!x.is_integer()) {
    if (root_ == 0) {
      throw Error(ErrorCode::kNonSquareFieldForHalfIntegerE,
                  "q^" + x.to_string() + " needs a square q, got " + std::to_string(q_));
    }
    base = root_;
    e = x.twice;
  }
  if (e >= 0) return Rational(ipow(base, static_cast<std::uint64_t>(e)));
  return Rational(BigInt(1), ipow(base, static_cast<std::uint64_t>(-e)));
}

BigInt to_integer(const Rational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw Error(ErrorCode::kNonIntegerResult, std::string(what) + " is not an integer");
  }
  return boost::multiprecision::numerator(r);
}

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kNonIntegerResult, std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace oppflags
