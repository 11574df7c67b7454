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
#include <optional>

#include "oppflags/exact_linalg.hpp"
#include "oppflags/instance.hpp"
#include "oppflags/qpower.hpp"
#include "oppflags/types.hpp"

namespace oppflags {

struct SpanningOptions {
  /// Exact fraction-free rank is also computed when rows * cols is within this.
  std::size_t exact_budget = kExactBudget;
  /// Oriflamme only: columns F_j(c^+, X) instead of F'_j(c, X).
  bool component = false;
};

struct SpanningReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  ModularRank rank;
  std::optional<std::size_t> exact_rank;
  /// Number of families times the generic degree of the reflection module.
  BigInt expected;
  /// Type A: rank after dropping the column of point 0 from every F_j.
  std::optional<ModularRank> drop_one_rank;
  std::optional<std::size_t> drop_one_cols;
  bool ok() const;
};

/// Rank of [F_1 | ... | F_m] (F' for oriflamme instances), flags by m * points.
SpanningReport spanning_rank(const Instance& inst, const TypeTable& types, const SpanningOptions& options = {});

}  // namespace oppflags
