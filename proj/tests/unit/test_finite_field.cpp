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
#include <set>

#include <gtest/gtest.h>

#include <oppflags/error.hpp>
#include <oppflags/finite_field.hpp>

namespace oppflags {
namespace {

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, AdditiveAndMultiplicativeGroups) {
  const auto f = FiniteField::of_order(GetParam());
  const std::uint32_t q = f.order();
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto x = f.element(a);
    EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
    EXPECT_EQ(f.add(x, f.zero()), x);
    EXPECT_EQ(f.mul(x, f.one()), x);
    if (a != 0) {
      EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
      EXPECT_EQ(f.pow(x, q - 1), f.one());
      EXPECT_EQ(f.pow(x, -1), f.inv(x));
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto y = f.element(b);
      EXPECT_EQ(f.add(x, y), f.add(y, x));
      EXPECT_EQ(f.mul(x, y), f.mul(y, x));
      const auto z = f.element((a * 7 + b * 3 + 1) % q);
      EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
      EXPECT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
    }
  }
}

TEST_P(FieldAxioms, PrimitiveElementGeneratesTheGroup) {
  const auto f = FiniteField::of_order(GetParam());
  EXPECT_EQ(f.multiplicative_order(f.primitive()), f.order() - 1);
  std::set<std::uint32_t> seen;
  for (std::uint32_t e = 0; e + 1 < f.order(); ++e) seen.insert(f.pow(f.primitive(), e).index);
  EXPECT_EQ(seen.size(), f.order() - 1);
}

TEST_P(FieldAxioms, SquaresAreCounted) {
  const auto f = FiniteField::of_order(GetParam());
  std::uint32_t squares = 0;
  for (std::uint32_t a = 0; a < f.order(); ++a) squares += f.is_square(f.element(a)) ? 1 : 0;
  const std::uint32_t expected = f.characteristic() == 2 ? f.order() : (f.order() + 1) / 2;
  EXPECT_EQ(squares, expected);
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u));

TEST(FiniteField, SmallFields) {
  const auto f2 = FiniteField::make(2, 1);
  EXPECT_EQ(f2.order(), 2u);
  const auto f4 = FiniteField::make(2, 2);
  for (std::uint32_t a = 1; a < 4; ++a) EXPECT_EQ(f4.pow(f4.element(a), 3), f4.one());
  const auto f3 = FiniteField::make(3, 1);
  EXPECT_EQ(f3.add(f3.one(), f3.element(2)), f3.zero());
}

TEST(FiniteField, ConjugationIsAnInvolutiveAutomorphism) {
  for (std::uint32_t q : {4u, 9u, 16u}) {
    const auto f = FiniteField::of_order(q);
    std::uint32_t fixed = 0;
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto x = f.element(a);
      EXPECT_EQ(f.conj(f.conj(x)), x);
      fixed += f.conj(x) == x ? 1 : 0;
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto y = f.element(b);
        EXPECT_EQ(f.conj(f.mul(x, y)), f.mul(f.conj(x), f.conj(y)));
        EXPECT_EQ(f.conj(f.add(x, y)), f.add(f.conj(x), f.conj(y)));
      }
    }
    // The fixed field has order sqrt(q).
    EXPECT_EQ(fixed * fixed, q);
  }
}

TEST(FiniteField, Errors) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kUnsupported;
  };
  EXPECT_EQ(code([] { FiniteField::make(6, 1); }), ErrorCode::kNonPrime);
  EXPECT_EQ(code([] { FiniteField::of_order(12); }), ErrorCode::kNonPrime);
  EXPECT_EQ(code([] { FiniteField::make(2, 17); }), ErrorCode::kTooLarge);
  const auto f = FiniteField::of_order(8);
  EXPECT_EQ(code([&] { f.inv(f.zero()); }), ErrorCode::kDivisionByZero);
  EXPECT_EQ(code([&] { f.conj(f.one()); }), ErrorCode::kOddDegreeField);
}

TEST(FiniteField, PrimalityHelper) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(268435399));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

}  // namespace
}  // namespace oppflags
