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

#include "oppflags/instance.hpp"
#include "oppflags/types.hpp"

namespace oppflags {

/// Deterministic sample of `count` distinct indices below `total`, ascending.
/// Returns all indices when count is 0 or at least total.
std::vector<std::size_t> sample_indices(std::size_t total, std::size_t count, std::uint64_t seed);

struct LiftedOptions {
  std::size_t sample = 0;  // flags to check; 0 checks all of them
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Oriflamme only: use F_j(c^+, X) instead of F'_j(c, X).
  bool component = false;
};

struct LiftedFamilyResult {
  int j = 0;
  std::int64_t lambda = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Pairs (c, X) with F_j(c, X) != 0, so that the identity is not vacuous.
  std::size_t nonzero = 0;
  /// First failing (flag, point), if any.
  std::optional<std::pair<std::size_t, std::uint32_t>> first_failure;
};

struct LiftedReport {
  std::size_t flags_checked = 0;
  std::size_t points = 0;
  bool exhaustive = false;
  std::vector<LiftedFamilyResult> families;
  bool ok() const;
};

/// Checks sum_{d opp c} F_j(d, X) = lambda F_j(c, X) for sampled flags c, every
/// point X and every family j. `types` is the table of the complex (the host
/// for oriflamme instances).
LiftedReport verify_flag_eigenvectors(const Instance& inst, const TypeTable& types, const LiftedOptions& options);

struct ChiReport {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::optional<std::string> first_mismatch;
  bool ok() const { return checks > 0 && mismatches == 0; }
};

/// Compares eval_chi with eval_F on every (point, flag, j); types A and B.
ChiReport compare_chi(const Instance& inst, const TypeTable& types);

}  // namespace oppflags
