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
#include <span>
#include <vector>

#include "oppflags/flag_complex.hpp"

namespace oppflags {

/// Type of flag `c` with respect to point `x`.
///
/// Type A: least k with x in U_k, else n+1. Polar: least k in the chain
/// U_1 < ... < U_n < U_{n-1}^perp < ... < U_1^perp containing x, else 2n.
int flag_type(const FlagComplex& fc, std::size_t c, std::uint32_t x);

/// flag_type for every (flag, point) pair, one byte each.
class TypeTable {
 public:
  static TypeTable build(const FlagComplex& fc);

  int num_types() const noexcept { return ell_; }
  std::size_t num_flags() const noexcept { return flags_; }
  std::size_t num_points() const noexcept { return points_; }

  int type(std::size_t flag, std::uint32_t point) const { return data_[flag * points_ + point]; }
  std::span<const std::uint8_t> row(std::size_t flag) const { return {data_.data() + flag * points_, points_}; }

  /// |C_i^X| for i = 1..l (index i-1).
  std::vector<std::size_t> class_sizes(std::uint32_t x) const;
  /// Flags of type i with respect to x, ascending.
  std::vector<std::uint32_t> class_members(std::uint32_t x, int i) const;

 private:
  int ell_ = 0;
  std::size_t flags_ = 0;
  std::size_t points_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Deterministic spread of base points: first, middle and last (deduplicated).
std::vector<std::uint32_t> representative_points(std::size_t num_points, std::size_t count = 3);

}  // namespace oppflags
