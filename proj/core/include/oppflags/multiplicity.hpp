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
#include <string>
#include <vector>

#include "oppflags/exact_linalg.hpp"
#include "oppflags/families.hpp"
#include "oppflags/instance.hpp"

namespace oppflags {

struct MultiplicityOptions {
  bool empirical = false;
  std::size_t budget = kNullityBudget;
};

struct MultiplicityReport {
  std::string descriptor;
  LambdaMin lambda_min;
  /// nullopt when lambda_min is irrational at this q.
  std::optional<BigInt> lambda_value;
  std::vector<ModuleInfo> modules;
  /// Sum over attaining modules of within-module multiplicity times degree.
  BigInt closed;
  std::optional<TableRow> table;
  std::optional<std::size_t> empirical;
  /// Per-prime ranks behind `empirical`.
  std::optional<ModularRank> empirical_rank;
  /// "closed", "table", "both", "neither", or empty without an empirical value.
  std::string matching;
};

/// Closed and tabulated multiplicities of lambda_min, plus the nullity of
/// A - lambda_min I when requested. For irrational lambda_min (type A of even
/// rank, q not a square) the nullity of A^2 - lambda_min^2 I is halved, as
/// the two conjugate eigenvalues share their multiplicity.
MultiplicityReport multiplicity(const Instance& inst, const MultiplicityOptions& options = {});

}  // namespace oppflags
