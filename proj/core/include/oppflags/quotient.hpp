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
#include <vector>

#include "oppflags/descriptor.hpp"
#include "oppflags/exact_linalg.hpp"
#include "oppflags/instance.hpp"
#include "oppflags/types.hpp"

namespace oppflags {

enum class Provenance { kEmpirical, kClosedForm };

/// l x l matrix with Q_ij = number of flags of type j opposite a fixed flag of type i.
struct QuotientMatrix {
  IntMatrix entries;
  Provenance provenance = Provenance::kClosedForm;
};

/// Closed form for types A and B; kUnsupported for oriflamme descriptors.
QuotientMatrix closed_form_quotient(const Descriptor& d);

/// The small worked matrices written entrywise in q and e: type A with n = 3
/// and type B with n = 2. nullopt elsewhere.
std::optional<IntMatrix> worked_example_quotient(const Descriptor& d);

struct QuotientOptions {
  /// Flags sampled per type and base point; all of them when fewer exist.
  std::size_t representatives = 3;
  /// Base points; empty means representative_points(num_points).
  std::vector<std::uint32_t> base_points;
};

/// Counts opposite flags by type for several representatives of every type and
/// several base points. Throws kRepresentativeDisagreement if any two differ.
QuotientMatrix empirical_quotient(const Instance& inst, const TypeTable& types, const QuotientOptions& options = {});

/// Row sums of `q`; each equals the valency.
std::vector<std::int64_t> row_sums(const IntMatrix& q);

/// |C_i^X| Q_ij == |C_j^X| Q_ji for all i, j.
bool double_counting_holds(const IntMatrix& q, const std::vector<std::int64_t>& class_sizes);

}  // namespace oppflags
