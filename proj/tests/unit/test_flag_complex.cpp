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
#include <vector>

#include <gtest/gtest.h>

#include <oppflags/descriptor.hpp>
#include <oppflags/error.hpp>
#include <oppflags/flag_complex.hpp>
#include <oppflags/instance.hpp>
#include <oppflags/oriflamme.hpp>
#include <oppflags/types.hpp>

#include "fixtures.hpp"

namespace oppflags {
namespace {

using testing::load;

TEST(FlagComplex, FlagAndSubspaceCounts) {
  const auto& pg = load("A:3:2").inst.complex();
  EXPECT_EQ(pg.num_flags(), 315u);
  EXPECT_EQ(pg.num_subspaces(1), 15u);
  EXPECT_EQ(pg.num_subspaces(2), 35u);
  EXPECT_EQ(pg.num_subspaces(3), 15u);
  EXPECT_EQ(pg.branching(1), 7u);
  EXPECT_EQ(pg.branching(2), 3u);
  const auto& w = load("B:2:2:2:sp").inst.complex();
  EXPECT_EQ(w.num_flags(), 45u);
  EXPECT_EQ(w.num_subspaces(2), 15u);
  EXPECT_EQ(load("B:2:4:2:ell").inst.complex().num_flags(), 135u);
  EXPECT_EQ(load("B:2:1:4:herm").inst.complex().num_flags(), 135u);
}

TEST(FlagComplex, IndexOfInvertsFlag) {
  const auto& fc = load("B:2:1:4:herm").inst.complex();
  for (std::size_t i = 0; i < fc.num_flags(); ++i) EXPECT_EQ(fc.index_of(fc.flag(i)), i);
}

TEST(FlagComplex, ChainsAreNested) {
  const auto& fc = load("A:3:2").inst.complex();
  for (std::size_t i = 0; i < fc.num_flags(); ++i) {
    for (int k = 1; k < fc.length(); ++k) {
      EXPECT_TRUE(fc.flag_member(i, k).pts.subset_of(fc.flag_member(i, k + 1).pts));
    }
  }
}

TEST(FlagComplex, OppositeFlagsMatchBruteForce) {
  for (const char* text : {"A:3:2", "B:2:2:2:sp", "B:2:0:2:hyp", "B:2:4:2:ell"}) {
    const auto& fc = load(text).inst.complex();
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < fc.num_flags(); ++c) {
      fc.opposite_flags(c, out);
      std::vector<std::uint32_t> brute;
      for (std::size_t d = 0; d < fc.num_flags(); ++d) {
        if (fc.is_opposite(c, d)) brute.push_back(static_cast<std::uint32_t>(d));
      }
      ASSERT_EQ(out, brute) << text << " flag " << c;
    }
  }
}

TEST(FlagComplex, GeneratorClassesOfHyperbolicQuadric) {
  const auto& fc = load("B:2:0:2:hyp").inst.complex();
  ASSERT_TRUE(fc.is_hyperbolic());
  EXPECT_EQ(fc.generator_class(0), 1);
  int plus = 0;
  for (std::uint32_t g = 0; g < fc.num_subspaces(2); ++g) plus += fc.generator_class(g) == 1 ? 1 : 0;
  EXPECT_EQ(plus, 3);
  EXPECT_EQ(fc.num_subspaces(2), 6u);
  const auto& w = load("B:2:2:2:sp").inst.complex();
  EXPECT_FALSE(w.is_hyperbolic());
  try {
    w.generator_class(0);
    FAIL() << "generator class in W(3,2)";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHyperbolic);
  }
}

TEST(FlagType, Examples) {
  const auto& pg = load("A:3:2").inst.complex();
  const auto x = pg.flag_member(0, 1).pts.members().front();
  EXPECT_EQ(flag_type(pg, 0, x), 1);
  const auto& plane = pg.flag_member(0, 3).pts;
  for (std::uint32_t y = 0; y < pg.geometry().num_points(); ++y) {
    if (!plane.test(y)) {
      EXPECT_EQ(flag_type(pg, 0, y), 4);
    }
  }
  const auto& w = load("B:2:2:2:sp").inst.complex();
  PointSet mid = w.flag_member(0, 1).perp;
  mid.subtract(w.flag_member(0, 2).pts);
  ASSERT_GT(mid.count(), 0u);
  mid.for_each([&](std::size_t y) { EXPECT_EQ(flag_type(w, 0, static_cast<std::uint32_t>(y)), 3); });
}

TEST(Oriflamme, RankThreeHalvesTheHost) {
  const auto inst = Instance::load(Descriptor::oriflamme_unchecked(3, 2));
  ASSERT_TRUE(inst.is_oriflamme());
  const auto& o = inst.oriflamme();
  EXPECT_EQ(o.num_flags() * 2, o.host().num_flags());
  for (std::size_t k = 0; k < o.num_flags(); ++k) {
    const auto n = o.rank();
    EXPECT_EQ(o.host().generator_class(o.host().flag(o.plus(k))[n - 1]), 1);
    EXPECT_EQ(o.host().generator_class(o.host().flag(o.minus(k))[n - 1]), -1);
    EXPECT_EQ(Oriflamme::from_host(o.plus(k)), k);
  }
  std::vector<std::uint32_t> out;
  std::size_t degree = 0;
  for (std::size_t c = 0; c < o.num_flags(); ++c) {
    o.opposite_flags(c, out);
    if (c == 0) degree = out.size();
    EXPECT_EQ(out.size(), degree);
    for (auto d : out) EXPECT_TRUE(o.is_opposite(d, c));
  }
  EXPECT_GT(degree, 0u);
}

TEST(Oriflamme, RejectsNonHyperbolicHost) {
  EXPECT_THROW(Oriflamme(load("B:2:2:2:sp").inst.complex_ptr()), Error);
}

}  // namespace
}  // namespace oppflags
