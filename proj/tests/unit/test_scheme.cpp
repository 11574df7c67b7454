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

#include <oppflags/error.hpp>
#include <oppflags/intersection.hpp>
#include <oppflags/point_scheme.hpp>
#include <oppflags/triangular.hpp>

#include "fixtures.hpp"

namespace oppflags {
namespace {

using testing::load;

RationalMatrix rational_rows(std::initializer_list<std::initializer_list<int>> r) {
  RationalMatrix m(r.size(), r.begin()->size());
  std::size_t i = 0;
  for (const auto& row : r) {
    std::size_t j = 0;
    for (auto v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

TEST(Intersection, Relations) {
  EXPECT_EQ(relation_count(Descriptor::parse("A:3:2")), 2);
  EXPECT_EQ(relation_count(Descriptor::parse("B:2:2:2:sp")), 3);
  const auto& g = load("B:2:2:2:sp").inst.geometry();
  EXPECT_EQ(relation_index(g, 0, 0), 0);
  for (std::uint32_t y = 1; y < g.num_points(); ++y) {
    EXPECT_EQ(relation_index(g, 0, y), g.perp_points(0).test(y) ? 1 : 2);
  }
}

TEST(Intersection, OracleValues) {
  const auto pg = closed_form_intersections(Descriptor::parse("A:3:2"));
  EXPECT_EQ(pg.at(2, 3, 1), 12);
  EXPECT_EQ(pg.at(1, 1, 1), 0);
  const auto w = closed_form_intersections(Descriptor::parse("B:2:2:2:sp"));
  EXPECT_EQ(w.at(1, 4, 2), 3);
  EXPECT_EQ(w.at(4, 1, 2), 3);
}

TEST(Intersection, ClosedFormsAgreeWithCounts) {
  for (const char* text : {"A:3:2", "A:3:3", "B:2:2:2:sp", "B:2:4:2:ell", "B:2:1:4:herm", "B:2:0:2:hyp",
                           "B:3:2:2:sp"}) {
    const auto& l = load(text);
    const auto closed = closed_form_intersections(l.inst.descriptor());
    const auto emp = empirical_intersections(l.inst.geometry(), l.types);
    EXPECT_TRUE(intersection_mismatches(closed, emp).empty()) << text;
    // Row sums over j give the class size of type i.
    const auto sizes = l.types.class_sizes(0);
    for (int k = 1; k < emp.relations(); ++k) {
      for (int i = 1; i <= emp.types(); ++i) {
        std::int64_t sum = 0;
        for (int j = 1; j <= emp.types(); ++j) sum += emp.at(i, j, k).value_or(0);
        EXPECT_EQ(sum, static_cast<std::int64_t>(sizes[static_cast<std::size_t>(i - 1)])) << text;
      }
    }
  }
  IntersectionNumbers a(2, 2);
  IntersectionNumbers b(2, 2);
  a.set(1, 1, 1, 5);
  b.set(1, 1, 1, 6);
  EXPECT_EQ(intersection_mismatches(a, b).size(), 1u);
  EXPECT_THROW(closed_form_intersections(Descriptor::parse("D:4:2")), Error);
}

TEST(PointScheme, ProjectiveSpace) {
  const auto s = point_scheme(load("A:3:2").inst.geometry());
  EXPECT_EQ(s.p_matrix, rational_rows({{1, 14}, {1, -1}}));
  EXPECT_TRUE(s.partition_ok);
  EXPECT_TRUE(s.eigen_ok);
  EXPECT_EQ(s.idempotent_ranks, (std::vector<std::size_t>{1, 14}));
  EXPECT_EQ(s.reflection_degree, BigInt(14));
  EXPECT_EQ(idempotent_entry(s, 1, 0, 0), Rational(14, 15));
  EXPECT_EQ(idempotent_entry(s, 1, 0, 1), Rational(-1, 15));
}

TEST(PointScheme, SymplecticQuadrangle) {
  const auto& g = load("B:2:2:2:sp").inst.geometry();
  const auto s = point_scheme(g);
  EXPECT_EQ(s.p_matrix, rational_rows({{1, 6, 8}, {1, 1, -2}, {1, -3, 2}}));
  EXPECT_EQ(closed_p_matrix(g.descriptor()), s.p_matrix);
  EXPECT_TRUE(s.partition_ok);
  EXPECT_TRUE(s.eigen_ok);
  // Collinearity spectrum {6: 1, 1: 9, -3: 5} from the oracle.
  EXPECT_EQ(s.idempotent_ranks, (std::vector<std::size_t>{1, 9, 5}));
  EXPECT_EQ(s.reflection_degree, BigInt(9));
  const auto a1 = relation_matrix(g, 1);
  for (std::size_t x = 0; x < 15; ++x) {
    std::int64_t deg = 0;
    for (std::size_t y = 0; y < 15; ++y) deg += a1(x, y);
    EXPECT_EQ(deg, 6);
  }
}

TEST(PointScheme, ReflectionDegreeMatchesRankE1) {
  for (const char* text : {"A:3:3", "B:2:4:2:ell", "B:2:1:4:herm", "B:2:0:2:hyp", "B:3:2:2:sp"}) {
    const auto s = point_scheme(load(text).inst.geometry());
    EXPECT_TRUE(s.partition_ok && s.eigen_ok) << text;
    EXPECT_EQ(BigInt(s.idempotent_ranks.at(1)), s.reflection_degree) << text;
    EXPECT_EQ(closed_p_matrix(Descriptor::parse(text)), s.p_matrix) << text;
  }
}

TEST(Triangular, GValues) {
  EXPECT_EQ(triangular_g(Descriptor::parse("A:3:2"), 1), 2);
  EXPECT_EQ(triangular_g(Descriptor::parse("A:3:2"), 2), 1);
  EXPECT_EQ(triangular_g(Descriptor::parse("B:3:2:2:sp"), 1), 3);
  EXPECT_EQ(triangular_g(Descriptor::parse("B:3:2:2:sp"), 3), 1);
}

TEST(Triangular, CriterionHolds) {
  for (const char* text : {"A:3:2", "B:2:2:2:sp", "B:2:4:2:ell", "B:2:1:4:herm", "B:3:2:2:sp"}) {
    const auto& l = load(text);
    const auto scheme = point_scheme(l.inst.geometry());
    const auto rep = triangular_check(l.inst, l.types, scheme);
    EXPECT_TRUE(rep.ok()) << text;
    ASSERT_EQ(rep.coefficients.size(), static_cast<std::size_t>(family_count(l.inst.descriptor())));
    for (std::size_t i = 0; i < rep.coefficients.size(); ++i) {
      const auto& c = rep.coefficients[i];
      const auto& d = rep.direct[i];
      EXPECT_EQ(c.spectrum.at(1), c.stated) << text << " j=" << c.j;
      EXPECT_EQ(d.alpha, c.stated) << text << " j=" << c.j;
      EXPECT_NE(d.alpha, 0) << text;
      for (std::size_t r = 0; r < c.spectrum.size(); ++r) {
        if (r != 1) {
          EXPECT_EQ(c.spectrum[r], 0) << text;
        }
      }
    }
  }
}

TEST(Triangular, DetectsAWrongFamily) {
  const auto& l = load("A:3:2");
  const auto scheme = point_scheme(l.inst.geometry());
  auto f = eigvec_family(l.inst.descriptor(), 1);
  f.coeffs = {1, 0, 0, 0};
  const auto d = triangular_direct(l.types, l.inst.geometry(), f, triangular_g(l.inst.descriptor(), 1), scheme);
  EXPECT_FALSE(d.ok);
}

}  // namespace
}  // namespace oppflags
