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

#include "oppflags/flag_complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "oppflags/error.hpp"

namespace oppflags {

namespace {

SubspaceRecord make_record(const Geometry& g, Subspace sub) {
  SubspaceRecord rec;
  rec.pts = g.points_of(sub);
  if (g.is_polar()) rec.perp = g.perp_points_of(sub);
  rec.sub = std::move(sub);
  return rec;
}

std::size_t rank_of_point_count(std::size_t count, std::uint32_t q) {
  std::size_t rank = 0;
  std::size_t total = 0;
  std::size_t power = 1;
  while (total < count) {
    total += power;
    power *= q;
    ++rank;
  }
  return rank;
}

}  // namespace

std::shared_ptr<const FlagComplex> FlagComplex::build(std::shared_ptr<const Geometry> geometry) {
  const Geometry& g = *geometry;
  const int n = g.descriptor().n;
  const std::size_t np = g.num_points();
  std::vector<std::vector<Subspace>> levels(static_cast<std::size_t>(n));
  std::vector<std::vector<std::vector<std::uint32_t>>> children(static_cast<std::size_t>(n));

  std::vector<SubspaceRecord> current;
  current.reserve(np);
  for (std::uint32_t p = 0; p < np; ++p) current.push_back(make_record(g, g.span_points(std::span(&p, 1))));

  std::vector<std::vector<SubspaceRecord>> records(static_cast<std::size_t>(n));
  for (int r = 1; r < n; ++r) {
    std::unordered_map<PointSet, std::uint32_t, PointSetHash> seen;
    std::vector<SubspaceRecord> next;
    auto& kids = children[static_cast<std::size_t>(r - 1)];
    kids.assign(current.size(), {});
    for (std::size_t u = 0; u < current.size(); ++u) {
      const SubspaceRecord& rec = current[u];
      PointSet cand(np);
      if (g.is_polar()) {
        cand = rec.perp;
      } else {
        cand.fill();
      }
      cand.subtract(rec.pts);
      PointSet covered = rec.pts;
      cand.for_each([&](std::size_t p) {
        if (covered.test(p)) return;
        std::vector<FieldElement> rows = rec.sub.rref;
        rows.insert(rows.end(), g.point(p).begin(), g.point(p).end());
        Subspace w = rref(g.field(), g.dim(), std::move(rows));
        PointSet wpts = g.points_of(w);
        covered |= wpts;
        auto [it, inserted] = seen.emplace(wpts, static_cast<std::uint32_t>(next.size()));
        if (inserted) {
          SubspaceRecord nrec;
          nrec.pts = std::move(wpts);
          if (g.is_polar()) nrec.perp = g.perp_points_of(w);
          nrec.sub = std::move(w);
          next.push_back(std::move(nrec));
        }
        kids[u].push_back(it->second);
      });
    }
    // canonical order: sort by echelon basis and renumber
    std::vector<std::uint32_t> order(next.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return next[a].sub < next[b].sub; });
    std::vector<std::uint32_t> renumber(next.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;
    for (auto& list : kids) {
      for (auto& id : list) id = renumber[id];
      std::sort(list.begin(), list.end());
    }
    std::vector<SubspaceRecord> sorted;
    sorted.reserve(next.size());
    for (auto id : order) sorted.push_back(std::move(next[id]));
    records[static_cast<std::size_t>(r - 1)] = std::move(current);
    current = std::move(sorted);
  }
  records[static_cast<std::size_t>(n - 1)] = std::move(current);

  auto fc = std::shared_ptr<FlagComplex>(new FlagComplex());
  fc->geometry_ = std::move(geometry);
  fc->n_ = n;
  fc->levels_ = std::move(records);
  fc->children_ = std::move(children);
  fc->finish();
  return fc;
}

std::shared_ptr<const FlagComplex> FlagComplex::from_levels(std::shared_ptr<const Geometry> geometry,
                                                           std::vector<std::vector<Subspace>> levels,
                                                           std::vector<std::vector<std::vector<std::uint32_t>>> children) {
  const Geometry& g = *geometry;
  const int n = g.descriptor().n;
  if (levels.size() != static_cast<std::size_t>(n) || children.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kCacheFormat, "cached complex has the wrong number of levels");
  }
  auto fc = std::shared_ptr<FlagComplex>(new FlagComplex());
  fc->geometry_ = std::move(geometry);
  fc->n_ = n;
  fc->levels_.resize(levels.size());
  for (std::size_t r = 0; r < levels.size(); ++r) {
    for (auto& sub : levels[r]) fc->levels_[r].push_back(make_record(g, std::move(sub)));
    if (r + 1 < levels.size() && children[r].size() != fc->levels_[r].size()) {
      throw Error(ErrorCode::kCacheFormat, "cached incidence lists do not match the subspaces");
    }
  }
  fc->children_ = std::move(children);
  fc->finish();
  return fc;
}

void FlagComplex::finish() {
  const Geometry& g = *geometry_;
  const auto n = static_cast<std::size_t>(n_);
  children_.resize(n);
  if (levels_.back().empty()) {
    throw Error(ErrorCode::kInadmissibleParameters, "no subspace of rank " + std::to_string(n_) + " exists");
  }
  if (g.is_polar()) {
    // Witt index n: no generator extends to a larger totally isotropic subspace.
    for (const auto& rec : levels_.back()) {
      if (rec.perp != rec.pts) {
        throw Error(ErrorCode::kInadmissibleParameters, "a rank-" + std::to_string(n_) + " subspace extends further");
      }
    }
  }

  branching_.assign(n, 0);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    const std::size_t b = children_[r].front().size();
    for (const auto& list : children_[r]) {
      if (list.size() != b) {
        throw Error(ErrorCode::kInadmissibleParameters, "nonuniform branching at rank " + std::to_string(r + 1));
      }
    }
    branching_[r] = b;
  }
  weight_.assign(n, 1);
  for (std::size_t r = n - 1; r-- > 0;) weight_[r] = weight_[r + 1] * branching_[r];

  std::size_t total = levels_[0].size();
  for (std::size_t r = 0; r + 1 < n; ++r) total *= branching_[r];
  flags_.clear();
  flags_.reserve(total * n);
  std::vector<std::uint32_t> chain(n);
  auto dfs = [&](auto&& self, std::size_t level) -> void {
    if (level + 1 == n) {
      flags_.insert(flags_.end(), chain.begin(), chain.end());
      return;
    }
    for (const auto child : children_[level][chain[level]]) {
      chain[level + 1] = child;
      self(self, level + 1);
    }
  };
  for (std::uint32_t p = 0; p < levels_[0].size(); ++p) {
    chain[0] = p;
    dfs(dfs, 0);
  }

  gen_class_.clear();
  const bool hyperbolic = g.form().kind == FormKind::kHyperbolic;
  if (hyperbolic) {
    const auto& gens = levels_.back();
    gen_class_.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      PointSet common = gens[i].pts;
      common &= gens[0].pts;
      const std::size_t k = rank_of_point_count(common.count(), g.field().order());
      gen_class_[i] = (k % 2) == (n % 2) ? 1 : -1;
    }
  }
}

std::size_t FlagComplex::index_of(std::span<const std::uint32_t> chain) const {
  std::size_t index = chain[0] * weight_[0];
  for (std::size_t r = 1; r < static_cast<std::size_t>(n_); ++r) {
    const auto kids = children(static_cast<int>(r), chain[r - 1]);
    const auto it = std::lower_bound(kids.begin(), kids.end(), chain[r]);
    index += static_cast<std::size_t>(it - kids.begin()) * weight_[r];
  }
  return index;
}

bool FlagComplex::level_ok(std::span<const std::uint32_t> c, int level, std::uint32_t candidate) const {
  const auto l = static_cast<std::size_t>(level);
  if (is_polar()) {
    return !subspace(level, c[l - 1]).pts.intersects(subspace(level, candidate).perp);
  }
  const int mirror = n_ + 1 - level;
  return !subspace(level, candidate).pts.intersects(subspace(mirror, c[static_cast<std::size_t>(mirror - 1)]).pts);
}

bool FlagComplex::is_opposite(std::size_t a, std::size_t b) const {
  const auto c = flag(a);
  const auto d = flag(b);
  for (int level = 1; level <= n_; ++level) {
    if (!level_ok(c, level, d[static_cast<std::size_t>(level - 1)])) return false;
  }
  return true;
}

void FlagComplex::opposite_flags(std::size_t c_index, std::vector<std::uint32_t>& out) const {
  out.clear();
  const auto c = flag(c_index);
  const auto n = static_cast<std::size_t>(n_);
  auto dfs = [&](auto&& self, std::size_t level, std::uint32_t id, std::size_t base) -> void {
    if (level == n) {
      out.push_back(static_cast<std::uint32_t>(base));
      return;
    }
    const auto kids = children(static_cast<int>(level), id);
    for (std::size_t pos = 0; pos < kids.size(); ++pos) {
      if (level_ok(c, static_cast<int>(level + 1), kids[pos])) self(self, level + 1, kids[pos], base + pos * weight_[level]);
    }
  };
  for (std::uint32_t p = 0; p < levels_[0].size(); ++p) {
    if (level_ok(c, 1, p)) dfs(dfs, 1, p, p * weight_[0]);
  }
}

int FlagComplex::generator_class(std::uint32_t generator_id) const {
  if (gen_class_.empty()) throw Error(ErrorCode::kNotHyperbolic, "generator classes need a hyperbolic quadric");
  if (generator_id >= gen_class_.size()) throw Error(ErrorCode::kNotAGenerator, "no such generator");
  return gen_class_[generator_id];
}

std::vector<std::vector<Subspace>> FlagComplex::level_bases() const {
  std::vector<std::vector<Subspace>> out(levels_.size());
  for (std::size_t r = 0; r < levels_.size(); ++r) {
    for (const auto& rec : levels_[r]) out[r].push_back(rec.sub);
  }
  return out;
}

}  // namespace oppflags
