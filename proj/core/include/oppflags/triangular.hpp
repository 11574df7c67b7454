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

#include <optional>
#include <vector>

#include "oppflags/families.hpp"
#include "oppflags/instance.hpp"
#include "oppflags/intersection.hpp"
#include "oppflags/point_scheme.hpp"
#include "oppflags/types.hpp"

namespace oppflags {

/// g(j) = m - j + 1 (type A, n = 2m - 1) or n - j + 1 (type B).
int triangular_g(const Descriptor& d, int j);

/// Lemma-level check from closed intersection numbers and the P-matrix.
struct TriangularCoefficients {
  int j = 0;
  int g = 0;
  /// sum_i f_ij t^k_{hi} for h < g, row h-1, column k; all must vanish.
  std::vector<std::vector<Rational>> below;
  /// sum_i f_ij t^k_{g,i}, the coefficient of A_k in T_g^T F_j.
  std::vector<Rational> at_g;
  /// sum_k at_g[k] p_k(r); zero except at r = 1.
  std::vector<Rational> spectrum;
  /// Closed forms for at_g and for spectrum[1].
  std::vector<Rational> stated_at_g;
  Rational stated;
  bool ok = false;
};

/// Matrix-level check: T_h^T F_j assembled by summation over flags.
struct TriangularDirect {
  int j = 0;
  int g = 0;
  bool below_zero = false;
  /// T_g^T F_j = alpha E_1 with alpha != 0.
  bool proportional = false;
  Rational alpha;
  /// T_g^T F_j is constant on each relation with these values.
  std::vector<std::optional<std::int64_t>> relation_values;
  bool ok = false;
};

struct TriangularReport {
  std::vector<TriangularCoefficients> coefficients;
  std::vector<TriangularDirect> direct;
  bool ok() const;
};

TriangularCoefficients triangular_coefficients(const Descriptor& d, int j, const IntersectionNumbers& t,
                                               const RationalMatrix& p);

TriangularDirect triangular_direct(const TypeTable& types, const Geometry& g, const EigvecFamily& f, int g_j,
                                   const PointScheme& scheme);

TriangularReport triangular_check(const Instance& inst, const TypeTable& types, const PointScheme& scheme);

}  // namespace oppflags
