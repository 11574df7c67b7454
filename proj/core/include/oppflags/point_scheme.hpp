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
#include <vector>

#include "oppflags/descriptor.hpp"
#include "oppflags/exact_linalg.hpp"
#include "oppflags/geometry.hpp"

namespace oppflags {

/// Eigenvalue table, rows indexed by idempotent r, columns by relation k:
/// entry (r, k) is p_k(r). The reflection idempotent is r = 1.
RationalMatrix closed_p_matrix(const Descriptor& d);

/// 0/1 matrix of relation k on the points.
IntMatrix relation_matrix(const Geometry& g, int k);

struct PointScheme {
  int relations = 0;
  RationalMatrix p_matrix;
  /// |points| * P^{-1}, entry (k, r).
  RationalMatrix dual;
  /// Integer multiples M_r = scale_r * E_r.
  std::vector<IntMatrix> scaled_idempotents;
  std::vector<BigInt> scales;
  std::vector<std::size_t> idempotent_ranks;
  /// A_0 = I and the relation matrices sum to J.
  bool partition_ok = false;
  /// A_k E_r = p_k(r) E_r for all k, r.
  bool eigen_ok = false;
  /// Generic degree of the reflection module; rank(E_1) should equal it.
  BigInt reflection_degree;
};

/// Type A and B geometries.
PointScheme point_scheme(const Geometry& g);

/// Rational entry of E_r.
Rational idempotent_entry(const PointScheme& s, int r, std::size_t x, std::size_t y);

}  // namespace oppflags
