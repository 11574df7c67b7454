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
#include <vector>

#include "oppflags/exact_linalg.hpp"
#include "oppflags/instance.hpp"

namespace oppflags {

struct StructureOptions {
  std::size_t sample = 0;  // oriflamme flags whose host edges are checked; 0 checks all
  std::uint64_t seed = 0;
  /// Nullity comparison is skipped when the host graph exceeds this.
  std::size_t budget = kNullityBudget;
};

struct SpectrumRow {
  std::int64_t lambda = 0;
  std::size_t host = 0;      // nullity of A_B - lambda I
  std::size_t plus = 0;      // nullity of A_D - lambda I
  std::size_t minus = 0;     // nullity of A_D + lambda I
  bool ok = false;
};

/// Relation between the opposition graph on host (type B, e = 0) flags and on
/// oriflamme flags: two copies for n even, the bipartite double for n odd.
struct StructureReport {
  int n = 0;
  bool exhaustive = false;
  std::size_t host_flags = 0;
  std::size_t edges = 0;
  /// Host edges joining generators of the wrong relative class.
  std::size_t class_violations = 0;
  /// Host edges whose partner edge under the class swap is missing.
  std::size_t partner_violations = 0;
  /// Oriflamme flags whose degree differs from their host flags' degree.
  std::size_t degree_mismatches = 0;
  std::vector<SpectrumRow> spectrum;
  bool ok() const;
};

StructureReport verify_structure(const Instance& inst, const StructureOptions& options = {});

}  // namespace oppflags
