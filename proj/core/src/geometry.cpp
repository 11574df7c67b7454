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

#include "oppflags/geometry.hpp"

#include <algorithm>
#include <string>

#include "oppflags/error.hpp"

namespace oppflags {

void PointSet::fill() {
  for (std::size_t i = 0; i < size_; ++i) set(i);
}

std::vector<std::uint32_t> PointSet::members() const {
  std::vector<std::uint32_t> out;
  for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

std::size_t PointSet::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ size_;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

Subspace rref(const FiniteField& f, int dim, std::vector<FieldElement> rows) {
  const int nrows = dim == 0 ? 0 : static_cast<int>(rows.size()) / dim;
  auto at = [&](int r, int c) -> FieldElement& { return rows[static_cast<std::size_t>(r * dim + c)]; };
  int rank = 0;
  for (int c = 0; c < dim && rank < nrows; ++c) {
    int piv = rank;
    while (piv < nrows && at(piv, c).index == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != rank) {
      for (int k = 0; k < dim; ++k) std::swap(at(piv, k), at(rank, k));
    }
    const FieldElement inv = f.inv(at(rank, c));
    for (int k = c; k < dim; ++k) at(rank, k) = f.mul(at(rank, k), inv);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || at(r, c).index == 0) continue;
      const FieldElement factor = at(r, c);
      for (int k = c; k < dim; ++k) at(r, k) = f.sub(at(r, k), f.mul(factor, at(rank, k)));
    }
    ++rank;
  }
  rows.resize(static_cast<std::size_t>(rank * dim));
  return Subspace{rank, dim, std::move(rows)};
}

namespace {

// Basis of {z : m z = 0} for an r x dim matrix m in reduced echelon form.
std::vector<FieldElement> kernel_basis(const FiniteField& f, const Subspace& m) {
  const int dim = m.dim;
  std::vector<int> pivot_col(static_cast<std::size_t>(m.rank));
  std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
  for (int r = 0; r < m.rank; ++r) {
    int c = 0;
    while (m.rref[static_cast<std::size_t>(r * dim + c)].index == 0) ++c;
    pivot_col[static_cast<std::size_t>(r)] = c;
    is_pivot[static_cast<std::size_t>(c)] = true;
  }
  std::vector<FieldElement> out;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec z(static_cast<std::size_t>(dim), f.zero());
    z[static_cast<std::size_t>(free)] = f.one();
    for (int r = 0; r < m.rank; ++r) {
      z[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
          f.neg(m.rref[static_cast<std::size_t>(r * dim + free)]);
    }
    out.insert(out.end(), z.begin(), z.end());
  }
  return out;
}

FieldElement least_elliptic_delta(const FiniteField& f) {
  for (std::uint32_t d = 0; d < f.order(); ++d) {
    const FieldElement delta = f.element(d);
    bool has_root = false;
    for (std::uint32_t t = 0; t < f.order() && !has_root; ++t) {
      const FieldElement x = f.element(t);
      has_root = f.add(f.add(f.mul(x, x), x), delta).index == 0;
    }
    if (!has_root) return delta;
  }
  throw Error(ErrorCode::kInadmissibleParameters, "no irreducible t^2 + t + d exists");
}

}  // namespace

Geometry Geometry::build(const Descriptor& d) {
  if (d.kind != Kind::kD) validate(d);
  Geometry g(d, FiniteField::of_order(d.q));
  const FiniteField& f = g.field_;
  const int dim = g.dim_ = d.ambient_dim();
  const int n = d.n;
  FormSpec& form = g.form_;
  form.kind = d.kind == Kind::kD ? FormKind::kHyperbolic : d.form;
  form.dim = dim;
  form.gram.assign(static_cast<std::size_t>(dim * dim), f.zero());
  form.quad_diag.assign(static_cast<std::size_t>(dim), f.zero());
  auto gram = [&](int a, int b) -> FieldElement& { return form.gram[static_cast<std::size_t>(a * dim + b)]; };
  const FieldElement two = f.add(f.one(), f.one());

  if (d.kind != Kind::kA) {
    for (int i = 0; i < n; ++i) {
      gram(2 * i, 2 * i + 1) = f.one();
      gram(2 * i + 1, 2 * i) = form.kind == FormKind::kSymplectic ? f.neg(f.one()) : f.one();
    }
    switch (form.kind) {
      case FormKind::kParabolic:
        form.quad_diag[static_cast<std::size_t>(2 * n)] = f.one();
        gram(2 * n, 2 * n) = two;
        break;
      case FormKind::kElliptic: {
        const FieldElement delta = least_elliptic_delta(f);
        form.quad_diag[static_cast<std::size_t>(2 * n)] = f.one();
        form.quad_diag[static_cast<std::size_t>(2 * n + 1)] = delta;
        gram(2 * n, 2 * n) = two;
        gram(2 * n + 1, 2 * n + 1) = f.mul(two, delta);
        gram(2 * n, 2 * n + 1) = f.one();
        gram(2 * n + 1, 2 * n) = f.one();
        break;
      }
      case FormKind::kHermitian:
        if (dim == 2 * n + 1) gram(2 * n, 2 * n) = f.one();
        break;
      default:
        break;
    }
  }

  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= d.q;
    if (total > (std::uint64_t{1} << 28)) {
      throw Error(ErrorCode::kScaleTooLarge, d.to_string() + " has more than 2^28 vectors");
    }
  }
  Vec v(static_cast<std::size_t>(dim), f.zero());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int a = dim - 1; a >= 0; --a) {
      v[static_cast<std::size_t>(a)] = {static_cast<std::uint32_t>(rest % d.q)};
      rest /= d.q;
    }
    const auto lead = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.index != 0; });
    if (lead->index != 1 || !g.is_singular(v)) continue;
    g.index_.emplace(g.key(v), static_cast<std::uint32_t>(g.points_.size()));
    g.points_.push_back(v);
  }

  if (g.is_polar()) {
    const std::size_t np = g.points_.size();
    g.perp_.assign(np, PointSet(np));
    for (std::size_t x = 0; x < np; ++x) {
      for (std::size_t y = x; y < np; ++y) {
        if (g.bilinear(g.points_[x], g.points_[y]).index == 0) {
          g.perp_[x].set(y);
          g.perp_[y].set(x);
        }
      }
    }
    // Non-degeneracy: no singular point lies in the radical.
    const Subspace rad = g.radical();
    if (g.points_of(rad).count() != 0) {
      throw Error(ErrorCode::kInadmissibleParameters, "the form has singular radical points");
    }
  }
  return g;
}

std::uint64_t Geometry::key(std::span<const FieldElement> v) const {
  std::uint64_t k = 0;
  for (const auto x : v) k = k * field_.order() + x.index;
  return k;
}

std::optional<std::uint32_t> Geometry::point_index(std::span<const FieldElement> v) const {
  const auto lead = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.index != 0; });
  if (lead == v.end()) return std::nullopt;
  std::uint64_t k = 0;
  if (lead->index == 1) {
    k = key(v);
  } else {
    const FieldElement inv = field_.inv(*lead);
    for (const auto x : v) k = k * field_.order() + field_.mul(x, inv).index;
  }
  const auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FieldElement Geometry::bilinear(std::span<const FieldElement> x, std::span<const FieldElement> y) const {
  const bool herm = form_.kind == FormKind::kHermitian;
  FieldElement s = field_.zero();
  for (int a = 0; a < dim_; ++a) {
    if (x[static_cast<std::size_t>(a)].index == 0) continue;
    for (int b = 0; b < dim_; ++b) {
      const FieldElement gab = form_.gram[static_cast<std::size_t>(a * dim_ + b)];
      if (gab.index == 0) continue;
      const FieldElement yb = herm ? field_.conj(y[static_cast<std::size_t>(b)]) : y[static_cast<std::size_t>(b)];
      s = field_.add(s, field_.mul(field_.mul(x[static_cast<std::size_t>(a)], gab), yb));
    }
  }
  return s;
}

FieldElement Geometry::quadratic(std::span<const FieldElement> x) const {
  FieldElement s = field_.zero();
  for (int a = 0; a < dim_; ++a) {
    const FieldElement xa = x[static_cast<std::size_t>(a)];
    if (xa.index == 0) continue;
    s = field_.add(s, field_.mul(form_.quad_diag[static_cast<std::size_t>(a)], field_.mul(xa, xa)));
    for (int b = a + 1; b < dim_; ++b) {
      const FieldElement gab = form_.gram[static_cast<std::size_t>(a * dim_ + b)];
      if (gab.index == 0) continue;
      s = field_.add(s, field_.mul(gab, field_.mul(xa, x[static_cast<std::size_t>(b)])));
    }
  }
  return s;
}

bool Geometry::is_singular(std::span<const FieldElement> x) const {
  switch (form_.kind) {
    case FormKind::kNone:
    case FormKind::kSymplectic: return true;
    case FormKind::kHermitian: return bilinear(x, x).index == 0;
    default: return quadratic(x).index == 0;
  }
}

const PointSet& Geometry::perp_points(std::uint32_t x) const {
  if (!is_polar()) throw Error(ErrorCode::kTypeAHasNoPerp, "projective spaces carry no polarity");
  return perp_.at(x);
}

PointRelation Geometry::relation(std::uint32_t x, std::uint32_t y) const {
  if (x == y) return PointRelation::kEqual;
  if (!is_polar()) return PointRelation::kDistinct;
  return perp_[x].test(y) ? PointRelation::kCollinear : PointRelation::kOpposite;
}

std::size_t Geometry::opposite_count(std::uint32_t x) const {
  if (!is_polar()) throw Error(ErrorCode::kTypeAHasNoCollinearity, "projective spaces have no opposite points");
  return num_points() - perp_.at(x).count();
}

Subspace Geometry::span(std::span<const Vec> vectors) const {
  std::vector<FieldElement> rows;
  for (const auto& v : vectors) rows.insert(rows.end(), v.begin(), v.end());
  return rref(field_, dim_, std::move(rows));
}

Subspace Geometry::span_points(std::span<const std::uint32_t> pts) const {
  std::vector<FieldElement> rows;
  for (const auto p : pts) rows.insert(rows.end(), points_[p].begin(), points_[p].end());
  return rref(field_, dim_, std::move(rows));
}

PointSet Geometry::points_of(const Subspace& u) const {
  PointSet out(points_.size());
  if (u.rank == 0) return out;
  const std::uint32_t q = field_.order();
  std::vector<std::uint32_t> coeff(static_cast<std::size_t>(u.rank), 0);
  Vec v(static_cast<std::size_t>(dim_));
  // coefficient vectors whose first nonzero entry is 1 give normalized vectors
  for (int lead = 0; lead < u.rank; ++lead) {
    std::uint64_t count = 1;
    for (int i = lead + 1; i < u.rank; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[static_cast<std::size_t>(lead)] = 1;
      std::uint64_t rest = idx;
      for (int i = u.rank - 1; i > lead; --i) {
        coeff[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
      std::fill(v.begin(), v.end(), field_.zero());
      for (int i = lead; i < u.rank; ++i) {
        const FieldElement c{coeff[static_cast<std::size_t>(i)]};
        if (c.index == 0) continue;
        const auto r = u.row(i);
        for (int k = 0; k < dim_; ++k) {
          v[static_cast<std::size_t>(k)] = field_.add(v[static_cast<std::size_t>(k)], field_.mul(c, r[static_cast<std::size_t>(k)]));
        }
      }
      const auto it = index_.find(key(v));
      if (it != index_.end()) out.set(it->second);
    }
  }
  return out;
}

Subspace Geometry::perp(const Subspace& u) const {
  if (!is_polar()) throw Error(ErrorCode::kTypeAHasNoPerp, "projective spaces carry no polarity");
  const bool herm = form_.kind == FormKind::kHermitian;
  // B(u, y) = sum_b (u G)_b s(y_b), so u^perp = s(ker(U G)).
  std::vector<FieldElement> k(static_cast<std::size_t>(u.rank * dim_), field_.zero());
  for (int i = 0; i < u.rank; ++i) {
    const auto r = u.row(i);
    for (int b = 0; b < dim_; ++b) {
      FieldElement s = field_.zero();
      for (int a = 0; a < dim_; ++a) {
        s = field_.add(s, field_.mul(r[static_cast<std::size_t>(a)], form_.gram[static_cast<std::size_t>(a * dim_ + b)]));
      }
      k[static_cast<std::size_t>(i * dim_ + b)] = s;
    }
  }
  std::vector<FieldElement> basis = kernel_basis(field_, rref(field_, dim_, std::move(k)));
  if (herm) {
    for (auto& x : basis) x = field_.conj(x);
  }
  return rref(field_, dim_, std::move(basis));
}

PointSet Geometry::perp_points_of(const Subspace& u) const {
  if (!is_polar()) throw Error(ErrorCode::kTypeAHasNoPerp, "projective spaces carry no polarity");
  PointSet out(points_.size());
  out.fill();
  for (int i = 0; i < u.rank; ++i) {
    const auto p = point_index(u.row(i));
    if (!p) return points_of(perp(u));
    out &= perp_[*p];
  }
  return out;
}

bool Geometry::contains(const Subspace& u, std::span<const FieldElement> v) const {
  std::vector<FieldElement> rows = u.rref;
  rows.insert(rows.end(), v.begin(), v.end());
  return rref(field_, dim_, std::move(rows)).rank == u.rank;
}

Subspace Geometry::intersect(const Subspace& a, const Subspace& b) const {
  // Zassenhaus: rows (a_i | a_i) and (b_j | 0); rows with zero left half span the intersection.
  const int w = 2 * dim_;
  std::vector<FieldElement> rows;
  for (int i = 0; i < a.rank; ++i) {
    rows.insert(rows.end(), a.row(i).begin(), a.row(i).end());
    rows.insert(rows.end(), a.row(i).begin(), a.row(i).end());
  }
  for (int j = 0; j < b.rank; ++j) {
    rows.insert(rows.end(), b.row(j).begin(), b.row(j).end());
    rows.insert(rows.end(), static_cast<std::size_t>(dim_), field_.zero());
  }
  const Subspace z = rref(field_, w, std::move(rows));
  std::vector<FieldElement> out;
  for (int r = 0; r < z.rank; ++r) {
    const auto row = z.row(r);
    if (std::all_of(row.begin(), row.begin() + dim_, [](FieldElement x) { return x.index == 0; })) {
      out.insert(out.end(), row.begin() + dim_, row.end());
    }
  }
  return rref(field_, dim_, std::move(out));
}

Subspace Geometry::radical() const {
  std::vector<FieldElement> id(static_cast<std::size_t>(dim_ * dim_), field_.zero());
  for (int i = 0; i < dim_; ++i) id[static_cast<std::size_t>(i * dim_ + i)] = field_.one();
  return perp(rref(field_, dim_, std::move(id)));
}

}  // namespace oppflags
