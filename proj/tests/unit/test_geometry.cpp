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
#include <oppflags/geometry.hpp>

namespace oppflags {
namespace {

Geometry build(const char* text) { return Geometry::build(Descriptor::parse(text)); }

TEST(Geometry, PointCounts) {
  EXPECT_EQ(build("A:3:2").num_points(), 15u);
  EXPECT_EQ(build("A:2:3").num_points(), 13u);
  EXPECT_EQ(build("B:2:2:2:sp").num_points(), 15u);
  EXPECT_EQ(build("B:2:4:2:ell").num_points(), 27u);
  EXPECT_EQ(build("B:2:1:4:herm").num_points(), 45u);
  EXPECT_EQ(build("B:2:0:2:hyp").num_points(), 9u);
  EXPECT_EQ(build("B:2:2:2:par").num_points(), 15u);
  EXPECT_EQ(build("B:2:2:3:par").num_points(), 40u);
}

TEST(Geometry, PointsAreSingularAndIndexed) {
  for (const char* text : {"A:3:2", "B:2:2:3:sp", "B:2:4:3:ell", "B:2:1:4:herm", "B:2:2:2:par"}) {
    const auto g = build(text);
    for (std::uint32_t i = 0; i < g.num_points(); ++i) {
      EXPECT_TRUE(g.is_singular(g.point(i))) << text;
      EXPECT_EQ(g.point_index(g.point(i)), i) << text;
    }
  }
}

// Opposite-point counts frozen from the brute-force oracle.
TEST(Geometry, OppositePointCounts) {
  const std::vector<std::pair<const char*, std::size_t>> cases = {
      {"B:2:2:2:sp", 8}, {"B:2:4:2:ell", 16}, {"B:2:1:4:herm", 32}, {"B:2:0:2:hyp", 4}, {"B:3:2:2:sp", 32}};
  for (const auto& [text, expected] : cases) {
    const auto g = build(text);
    for (std::uint32_t x = 0; x < g.num_points(); ++x) EXPECT_EQ(g.opposite_count(x), expected) << text;
  }
}

TEST(Geometry, RelationsAreSymmetricAndMatchPerp) {
  const auto g = build("B:2:2:2:sp");
  EXPECT_EQ(g.perp_points(0).count(), 7u);
  for (std::uint32_t x = 0; x < g.num_points(); ++x) {
    EXPECT_EQ(g.relation(x, x), PointRelation::kEqual);
    for (std::uint32_t y = 0; y < g.num_points(); ++y) {
      EXPECT_EQ(g.relation(x, y), g.relation(y, x));
      if (x != y) {
        const bool perp = g.perp_points(x).test(y);
        EXPECT_EQ(g.relation(x, y), perp ? PointRelation::kCollinear : PointRelation::kOpposite);
      }
    }
  }
}

TEST(Geometry, ProjectiveSpaceHasNoPerp) {
  const auto g = build("A:3:2");
  try {
    g.perp_points(0);
    FAIL() << "perp in PG(3,2)";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTypeAHasNoPerp);
  }
  EXPECT_THROW(g.opposite_count(0), Error);
}

TEST(Geometry, SubspaceOperations) {
  const auto g = build("B:3:2:2:sp");
  const std::vector<std::uint32_t> one = {0};
  const auto u = g.span_points(one);
  EXPECT_EQ(u.rank, 1);
  const auto up = g.perp(u);
  EXPECT_EQ(up.rank, g.dim() - 1);
  EXPECT_EQ(g.points_of(up), g.perp_points(0));
  EXPECT_EQ(g.perp(up), u);
  const auto x = g.perp_points(0).members();
  const std::vector<std::uint32_t> line = {0, x[1] == 0 ? x[2] : x[1]};
  const auto l = g.span_points(line);
  EXPECT_EQ(l.rank, 2);
  EXPECT_EQ(g.points_of(l).count(), 3u);
  EXPECT_EQ(g.intersect(l, up).rank, 2);
  EXPECT_TRUE(g.perp_points_of(l).subset_of(g.perp_points(0)));
}

TEST(Geometry, ParabolicRadicalInCharacteristicTwo) {
  EXPECT_EQ(build("B:2:2:2:par").radical().rank, 1);
  EXPECT_EQ(build("B:2:2:3:par").radical().rank, 0);
  EXPECT_EQ(build("B:2:2:2:sp").radical().rank, 0);
}

}  // namespace
}  // namespace oppflags
