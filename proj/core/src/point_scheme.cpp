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


#include "oppflags/point_scheme.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "oppflags/counts.hpp"
#include "oppflags/error.hpp"
#include "oppflags/families.hpp"
#include "oppflags/intersection.hpp"
#include "oppflags/qpower.hpp"

namespace oppflags {

namespace {

RationalMatrix inverse(RationalMatrix a) {
  const std::size_t n = a.rows();
  RationalMatrix inv(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::kDivisionByZero, "singular eigenvalue table");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a(piv, c), a(col, c));
      std::swap(inv(piv, c), inv(col, c));
    }
    const Rational lead = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= lead;
      inv(col, c) /= lead;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace

RationalMatrix closed_p_matrix(const Descriptor& d) {
  const QPower q(d.q);
  const int n = d.n;
  if (d.kind == Kind::kA) {
    RationalMatrix p(2, 2, Rational(1));
    p(0, 1) = Rational(counts::v(n, q)) - 1;
    p(1, 1) = -1;
    return p;
  }
  if (d.kind == Kind::kD) throw Error(ErrorCode::kUnsupported, "no point scheme for oriflamme flags");
  const HalfInt e = d.e();
  RationalMatrix p(3, 3, Rational(1));
  p(0, 1) = q.q() * Rational(counts::v(n - 1, e, q));
  p(0, 2) = q.pow(e + (2 * n - 2));
  p(1, 1) = q.pow(n - 1) - 1;
  p(1, 2) = -q.pow(n - 1);
  p(2, 1) = -q.pow(e + (n - 2)) - 1;
  p(2, 2) = q.pow(e + (n - 2));
  return p;
}

IntMatrix relation_matrix(const Geometry& g, int k) {
  const std::size_t np = g.num_points();
  IntMatrix a(np, np, 0);
  for (std::uint32_t x = 0; x < np; ++x) {
    for (std::uint32_t y = 0; y < np; ++y) {
      if (relation_index(g, x, y) == k) a(x, y) = 1;
    }
  }
  return a;
}

PointScheme point_scheme(const Geometry& g) {
  const Descriptor& d = g.descriptor();
  PointScheme s;
  s.relations = relation_count(d);
  s.p_matrix = closed_p_matrix(d);
  const std::size_t np = g.num_points();
  const auto rels = static_cast<std::size_t>(s.relations);
  s.dual = inverse(s.p_matrix);
  for (std::size_t k = 0; k < rels; ++k) {
    for (std::size_t r = 0; r < rels; ++r) s.dual(k, r) *= static_cast<std::int64_t>(np);
  }

  std::vector<IntMatrix> a;
  for (int k = 0; k < s.relations; ++k) a.push_back(relation_matrix(g, k));
  s.partition_ok = true;
  for (std::size_t x = 0; x < np; ++x) {
    for (std::size_t y = 0; y < np; ++y) {
      std::int64_t sum = 0;
      for (const auto& m : a) sum += m(x, y);
      if (sum != 1 || a[0](x, y) != (x == y ? 1 : 0)) s.partition_ok = false;
    }
  }

  // M_r = L_r * sum_k dual(k, r) A_k with L_r clearing denominators, so that
  // M_r = L_r * |points| * E_r.
  s.eigen_ok = true;
  for (std::size_t r = 0; r < rels; ++r) {
    BigInt lcm = 1;
    for (std::size_t k = 0; k < rels; ++k) {
      lcm = boost::integer::lcm(lcm, BigInt(denominator(s.dual(k, r))));
    }
    std::vector<std::int64_t> coeff(rels);
    for (std::size_t k = 0; k < rels; ++k) {
      coeff[k] = to_int64(to_integer(s.dual(k, r) * Rational(lcm), "idempotent coefficient"), "idempotent coefficient");
    }
    IntMatrix m(np, np, 0);
    for (std::size_t x = 0; x < np; ++x) {
      for (std::size_t y = 0; y < np; ++y) {
        for (std::size_t k = 0; k < rels; ++k) m(x, y) += coeff[k] * a[k](x, y);
      }
    }
    for (std::size_t k = 0; k < rels; ++k) {
      const Rational& pk = s.p_matrix(r, k);
      if (denominator(pk) != 1) {
        s.eigen_ok = false;
        continue;
      }
      const auto p = to_int64(numerator(pk), "eigenvalue");
      for (std::size_t x = 0; x < np && s.eigen_ok; ++x) {
        for (std::size_t y = 0; y < np; ++y) {
          std::int64_t sum = 0;
          for (std::size_t z = 0; z < np; ++z) {
            if (a[k](x, z) != 0) sum += m(z, y);
          }
          if (sum != p * m(x, y)) {
            s.eigen_ok = false;
            break;
          }
        }
      }
    }
    s.scales.push_back(lcm * static_cast<std::int64_t>(np));
    s.idempotent_ranks.push_back(rank_exact(m));
    s.scaled_idempotents.push_back(std::move(m));
  }

  for (const auto& mod : module_table(d)) {
    if (mod.label.find(d.kind == Kind::kA ? "," : "],[1])") != std::string::npos) {
      s.reflection_degree = mod.generic_degree;
      break;
    }
  }
  return s;
}

Rational idempotent_entry(const PointScheme& s, int r, std::size_t x, std::size_t y) {
  const auto ri = static_cast<std::size_t>(r);
  return Rational(s.scaled_idempotents[ri](x, y)) / Rational(s.scales[ri]);
}

}  // namespace oppflags
