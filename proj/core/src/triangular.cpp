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


#include "oppflags/triangular.hpp"

#include "oppflags/counts.hpp"
#include "oppflags/error.hpp"

namespace oppflags {

int triangular_g(const Descriptor& d, int j) {
  return family_count(d) - j + 1;
}

bool TriangularReport::ok() const {
  for (const auto& c : coefficients) {
    if (!c.ok) return false;
  }
  for (const auto& c : direct) {
    if (!c.ok) return false;
  }
  return !coefficients.empty() && coefficients.size() == direct.size();
}

TriangularCoefficients triangular_coefficients(const Descriptor& d, int j, const IntersectionNumbers& t,
                                               const RationalMatrix& p) {
  const auto f = eigvec_family(d, j);
  const int ell = t.types();
  const int rels = t.relations();
  TriangularCoefficients out;
  out.j = j;
  out.g = triangular_g(d, j);
  auto sum = [&](int h, int k) {
    Rational s = 0;
    for (int i = 1; i <= ell; ++i) {
      const auto fi = f.coeffs[static_cast<std::size_t>(i - 1)];
      if (fi == 0) continue;
      const auto v = t.at(h, i, k);
      if (!v) throw Error(ErrorCode::kUnsupported, "intersection number outside the closed form");
      s += Rational(fi) * *v;
    }
    return s;
  };
  out.ok = true;
  for (int h = 1; h < out.g; ++h) {
    std::vector<Rational> row;
    for (int k = 0; k < rels; ++k) {
      row.push_back(sum(h, k));
      if (row.back() != 0) out.ok = false;
    }
    out.below.push_back(std::move(row));
  }
  for (int k = 0; k < rels; ++k) out.at_g.push_back(sum(out.g, k));
  for (int r = 0; r < rels; ++r) {
    Rational s = 0;
    for (int k = 0; k < rels; ++k) s += out.at_g[static_cast<std::size_t>(k)] * p(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
    out.spectrum.push_back(s);
    if ((r == 1) == (s == 0)) out.ok = false;
  }

  const QPower q(d.q);
  const int n = d.n;
  if (d.kind == Kind::kA) {
    const int m = family_count(d);
    const Rational c1(counts::c(n - 1, q));
    const Rational c2(counts::c(n - 2, q));
    out.stated_at_g = {c1 * q.pow(m), -c2 * q.pow(m - 1)};
    out.stated = Rational(counts::v(n, q)) * c2 * q.pow(m - 1);
  } else {
    const HalfInt e = d.e();
    const Rational c1(counts::c(n - 1, e, q));
    const Rational c2(counts::c(n - 2, e, q));
    out.stated_at_g = {c1 * q.pow(e + (n - 1)), c2 * q.pow(e + (n - 2)) * (q.pow(n - 1) - 1), -c1};
    const Rational sq = q.pow(n - 1) - 1;
    out.stated = c2 * (Rational(counts::v(n - 1, e, q)) * (q.pow(e + (n - 1)) + q.pow(n - 1)) +
                       q.pow(e + (n - 2)) * sq * sq);
  }
  if (out.stated_at_g != out.at_g || out.stated != out.spectrum[1]) out.ok = false;
  return out;
}

TriangularDirect triangular_direct(const TypeTable& types, const Geometry& g, const EigvecFamily& f, int g_j,
                                   const PointScheme& scheme) {
  const std::size_t np = types.num_points();
  TriangularDirect out;
  out.j = f.j;
  out.g = g_j;
  // acc[h-1](X, Y) = sum over flags c of type h w.r.t. X of f(type(c, Y)).
  std::vector<IntMatrix> acc(static_cast<std::size_t>(g_j), IntMatrix(np, np, 0));
  for (std::size_t c = 0; c < types.num_flags(); ++c) {
    const auto row = types.row(c);
    for (std::size_t x = 0; x < np; ++x) {
      const int h = row[x];
      if (h > g_j) continue;
      auto dst = acc[static_cast<std::size_t>(h - 1)].row(x);
      for (std::size_t y = 0; y < np; ++y) dst[y] += f.coeffs[static_cast<std::size_t>(row[y] - 1)];
    }
  }
  out.below_zero = true;
  for (int h = 1; h < g_j; ++h) {
    if (acc[static_cast<std::size_t>(h - 1)] != IntMatrix(np, np, 0)) out.below_zero = false;
  }
  const IntMatrix& m = acc.back();
  out.relation_values.assign(static_cast<std::size_t>(scheme.relations), std::nullopt);
  bool constant = true;
  for (std::uint32_t x = 0; x < np; ++x) {
    for (std::uint32_t y = 0; y < np; ++y) {
      auto& slot = out.relation_values[static_cast<std::size_t>(relation_index(g, x, y))];
      if (!slot) slot = m(x, y);
      else if (*slot != m(x, y)) constant = false;
    }
  }
  const IntMatrix& e1 = scheme.scaled_idempotents.at(1);
  const Rational scale(scheme.scales.at(1));
  out.alpha = Rational(m(0, 0)) * scale / e1(0, 0);
  out.proportional = out.alpha != 0;
  for (std::size_t x = 0; x < np && out.proportional; ++x) {
    for (std::size_t y = 0; y < np; ++y) {
      if (Rational(m(x, y)) * scale != out.alpha * e1(x, y)) {
        out.proportional = false;
        break;
      }
    }
  }
  out.ok = out.below_zero && out.proportional && constant;
  return out;
}

TriangularReport triangular_check(const Instance& inst, const TypeTable& types, const PointScheme& scheme) {
  const Descriptor& d = inst.descriptor();
  if (inst.is_oriflamme()) throw Error(ErrorCode::kUnsupported, "triangular criterion needs point types");
  const auto t = closed_form_intersections(d);
  TriangularReport report;
  for (int j = 1; j <= family_count(d); ++j) {
    report.coefficients.push_back(triangular_coefficients(d, j, t, scheme.p_matrix));
    report.direct.push_back(
        triangular_direct(types, inst.geometry(), eigvec_family(d, j), triangular_g(d, j), scheme));
    // Both routes describe the same matrix T_g^T F_j = alpha E_1.
    if (report.direct.back().alpha != report.coefficients.back().spectrum[1]) report.direct.back().ok = false;
  }
  return report;
}

}  // namespace oppflags
