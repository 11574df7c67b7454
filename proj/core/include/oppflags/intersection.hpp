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
#include <optional>
#include <string>
#include <vector>

#include "oppflags/descriptor.hpp"
#include "oppflags/geometry.hpp"
#include "oppflags/types.hpp"

namespace oppflags {

/// Point relations indexed as scheme classes: 0 equal, 1 collinear (or
/// distinct in type A), 2 opposite.
int relation_count(const Descriptor& d);
int relation_index(const Geometry& g, std::uint32_t x, std::uint32_t y);
std::string relation_name(const Descriptor& d, int k);

/// t^k_ij = |C_i^X ∩ C_j^Y| for a pair (X, Y) in relation k.
class IntersectionNumbers {
 public:
  IntersectionNumbers() = default;
  IntersectionNumbers(int types, int relations);

  int types() const noexcept { return types_; }
  int relations() const noexcept { return relations_; }
  /// nullopt where no value is known (closed form with i, j both > n).
  std::optional<std::int64_t> at(int i, int j, int k) const { return values_[index(i, j, k)]; }
  void set(int i, int j, int k, std::int64_t value) { values_[index(i, j, k)] = value; }

  friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(types_) + static_cast<std::size_t>(j - 1)) *
               static_cast<std::size_t>(relations_) +
           static_cast<std::size_t>(k);
  }

  int types_ = 0;
  int relations_ = 0;
  std::vector<std::optional<std::int64_t>> values_;
};

/// Type A for all i, j. Type B for i <= n or j <= n (the other half by symmetry).
IntersectionNumbers closed_form_intersections(const Descriptor& d);

/// Counts over all flags for up to `pairs` pairs per relation; throws
/// kRepresentativeDisagreement when two pairs give different tables.
IntersectionNumbers empirical_intersections(const Geometry& g, const TypeTable& types, std::size_t pairs = 3);

/// Entries known in both tables and differing, as "t(i,j,k)" strings.
std::vector<std::string> intersection_mismatches(const IntersectionNumbers& closed, const IntersectionNumbers& empirical);

}  // namespace oppflags
