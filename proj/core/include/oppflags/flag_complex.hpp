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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "oppflags/geometry.hpp"

namespace oppflags {

/// One enumerated subspace: canonical basis, its points and (polar only) the points of its perp.
struct SubspaceRecord {
  Subspace sub;
  PointSet pts;
  PointSet perp;
};

/// Totally isotropic subspaces of ranks 1..n, their incidences, and the maximal flags.
///
/// Flags are indexed in depth-first order over the sorted incidence lists, so
/// flag indices are stable across runs and machines.
class FlagComplex {
 public:
  /// Enumerates subspaces by chain extension. Oriflamme descriptors enumerate their hyperbolic host.
  static std::shared_ptr<const FlagComplex> build(std::shared_ptr<const Geometry> g);

  /// Rebuilds from cached subspace bases and incidence lists.
  static std::shared_ptr<const FlagComplex> from_levels(std::shared_ptr<const Geometry> g,
                                                        std::vector<std::vector<Subspace>> levels,
                                                        std::vector<std::vector<std::vector<std::uint32_t>>> children);

  const Geometry& geometry() const noexcept { return *geometry_; }
  std::shared_ptr<const Geometry> geometry_ptr() const noexcept { return geometry_; }
  int length() const noexcept { return n_; }
  bool is_polar() const noexcept { return geometry_->is_polar(); }

  std::size_t num_subspaces(int rank) const { return levels_.at(static_cast<std::size_t>(rank - 1)).size(); }
  const SubspaceRecord& subspace(int rank, std::uint32_t id) const {
    return levels_[static_cast<std::size_t>(rank - 1)][id];
  }
  /// Rank-(rank+1) subspaces containing the given one, sorted.
  std::span<const std::uint32_t> children(int rank, std::uint32_t id) const {
    return children_[static_cast<std::size_t>(rank - 1)][id];
  }
  /// Common number of children of every rank-`rank` subspace.
  std::size_t branching(int rank) const { return branching_.at(static_cast<std::size_t>(rank - 1)); }

  std::size_t num_flags() const noexcept { return flags_.size() / static_cast<std::size_t>(n_); }
  /// Subspace ids of U_1..U_n.
  std::span<const std::uint32_t> flag(std::size_t i) const {
    return {flags_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  const SubspaceRecord& flag_member(std::size_t i, int rank) const { return subspace(rank, flag(i)[static_cast<std::size_t>(rank - 1)]); }
  /// Index of the flag with the given chain; the chain must be valid.
  std::size_t index_of(std::span<const std::uint32_t> chain) const;

  /// Type A: U_i and V_{n+1-i} share no point for all i. Polar: U_i meets no point of V_i^perp.
  bool is_opposite(std::size_t a, std::size_t b) const;
  /// Replaces `out` with all flags opposite flag `c`, ascending, by pruned depth-first search.
  void opposite_flags(std::size_t c, std::vector<std::uint32_t>& out) const;

  /// Hyperbolic hosts only: +1 for the class of the first generator, -1 for the other.
  /// Throws kNotHyperbolic otherwise.
  int generator_class(std::uint32_t generator_id) const;
  bool is_hyperbolic() const noexcept { return !gen_class_.empty(); }

  /// Levels as plain bases, for serialization.
  std::vector<std::vector<Subspace>> level_bases() const;
  const std::vector<std::vector<std::vector<std::uint32_t>>>& incidence() const noexcept { return children_; }

 private:
  FlagComplex() = default;
  void finish();
  bool level_ok(std::span<const std::uint32_t> c, int level, std::uint32_t candidate) const;

  std::shared_ptr<const Geometry> geometry_;
  int n_ = 0;
  std::vector<std::vector<SubspaceRecord>> levels_;
  std::vector<std::vector<std::vector<std::uint32_t>>> children_;
  std::vector<std::size_t> branching_;
  std::vector<std::size_t> weight_;  // flag index = sum over levels of position * weight
  std::vector<std::uint32_t> flags_;
  std::vector<std::int8_t> gen_class_;
};

}  // namespace oppflags
