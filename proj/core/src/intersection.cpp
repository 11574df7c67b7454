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


#include "oppflags/intersection.hpp"

#include "oppflags/counts.hpp"
#include "oppflags/error.hpp"
#include "oppflags/qpower.hpp"

namespace oppflags {

int relation_count(const Descriptor& d) { return d.kind == Kind::kA ? 2 : 3; }

int relation_index(const Geometry& g, std::uint32_t x, std::uint32_t y) {
  switch (g.relation(x, y)) {
    case PointRelation::kEqual: return 0;
    case PointRelation::kCollinear:
    case PointRelation::kDistinct: return 1;
    case PointRelation::kOpposite: return 2;
  }
  return 1;
}

std::string relation_name(const Descriptor& d, int k) {
  if (k == 0) return "equal";
  if (d.kind == Kind::kA) return "distinct";
  return k == 1 ? "collinear" : "opposite";
}

IntersectionNumbers::IntersectionNumbers(int types, int relations)
    : types_(types),
      relations_(relations),
      values_(static_cast<std::size_t>(types) * static_cast<std::size_t>(types) * static_cast<std::size_t>(relations)) {}

IntersectionNumbers closed_form_intersections(const Descriptor& d) {
  if (d.kind == Kind::kD) throw Error(ErrorCode::kUnsupported, "oriflamme flags carry no point types");
  const QPower q(d.q);
  const int n = d.n;
  const int ell = d.num_types();
  IntersectionNumbers t(ell, relation_count(d));
  auto put = [&](int i, int j, int k, const Rational& v) {
    const auto value = to_int64(to_integer(v, "intersection number"), "intersection number");
    t.set(i, j, k, value);
    t.set(j, i, k, value);
  };
  if (d.kind == Kind::kA) {
    const Rational c1(counts::c(n - 1, q));
    const Rational c2(counts::c(n - 2, q));
    for (int i = 1; i <= ell; ++i) {
      for (int j = 1; j <= ell; ++j) {
        const int delta = i == j ? 1 : 0;
        put(i, j, 0, delta * c1 * q.pow(i - 1));
        put(i, j, 1, c2 * q.pow(i - 2) * (q.pow(j - 1) - delta));
      }
    }
    return t;
  }
  const HalfInt e = d.e();
  const Rational c1(counts::c(n - 1, e, q));
  const Rational c2(counts::c(n - 2, e, q));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= ell; ++j) {
      const int delta = i == j ? 1 : 0;
      if (j <= n) {
        put(i, j, 0, delta * c1 * q.pow(i - 1));
        put(i, j, 1, c2 * q.pow(i - 2) * (q.pow(j - 1) - delta));
        put(i, j, 2, 0);
        continue;
      }
      put(i, j, 0, 0);
      const int s = i + j;
      if (s < 2 * n + 1) {
        put(i, j, 1, c2 * q.pow(e + (s - 4)));
        put(i, j, 2, 0);
      } else if (s == 2 * n + 1) {
        put(i, j, 1, 0);
        put(i, j, 2, c1);
      } else {
        put(i, j, 1, c2 * q.pow(e + (s - 5)));
        put(i, j, 2, c1 * (q.q() - 1) * q.pow(s - 2 * n - 2));
      }
    }
  }
  return t;
}

IntersectionNumbers empirical_intersections(const Geometry& g, const TypeTable& types, std::size_t pairs) {
  const int ell = types.num_types();
  const int rels = relation_count(g.descriptor());
  const auto np = static_cast<std::uint32_t>(types.num_points());
  IntersectionNumbers out(ell, rels);
  std::vector<bool> seen(static_cast<std::size_t>(rels), false);
  std::vector<std::int64_t> table(static_cast<std::size_t>(ell * ell));
  for (const auto x : representative_points(np, pairs)) {
    for (int k = 0; k < rels; ++k) {
      std::vector<std::uint32_t> partners;
      for (std::uint32_t y = 0; y < np; ++y) {
        if (relation_index(g, x, y) == k) partners.push_back(y);
      }
      if (partners.empty()) continue;
      for (const auto y : representative_points(partners.size(), pairs)) {
        const std::uint32_t py = partners[y];
        std::fill(table.begin(), table.end(), 0);
        for (std::size_t c = 0; c < types.num_flags(); ++c) {
          ++table[static_cast<std::size_t>((types.type(c, x) - 1) * ell + types.type(c, py) - 1)];
        }
        for (int i = 1; i <= ell; ++i) {
          for (int j = 1; j <= ell; ++j) {
            const auto v = table[static_cast<std::size_t>((i - 1) * ell + j - 1)];
            if (!seen[static_cast<std::size_t>(k)]) {
              out.set(i, j, k, v);
            } else if (out.at(i, j, k) != v) {
              throw Error(ErrorCode::kRepresentativeDisagreement,
                          "t(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                              ") differs for points " + std::to_string(x) + " and " + std::to_string(py));
            }
          }
        }
        seen[static_cast<std::size_t>(k)] = true;
      }
    }
  }
  return out;
}

std::vector<std::string> intersection_mismatches(const IntersectionNumbers& closed, const IntersectionNumbers& empirical) {
  std::vector<std::string> out;
  for (int i = 1; i <= closed.types(); ++i) {
    for (int j = 1; j <= closed.types(); ++j) {
      for (int k = 0; k < closed.relations(); ++k) {
        const auto a = closed.at(i, j, k);
        const auto b = empirical.at(i, j, k);
        if (a && b && *a != *b) {
          out.push_back("t(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  return out;
}

}  // namespace oppflags
