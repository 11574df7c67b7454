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
#include "oppflags/exact_linalg.hpp"
#include "oppflags/flag_complex.hpp"
#include "oppflags/oriflamme.hpp"
#include "oppflags/qpower.hpp"
#include "oppflags/types.hpp"

namespace oppflags {

/// sign * q^exponent, kept symbolic because type A of even rank has half-integer exponents.
struct SignedPower {
  int sign = 1;
  HalfInt exponent;

  /// Exact value; nullopt when it is irrational (half-integer exponent, non-square q).
  std::optional<BigInt> value(const QPower& q) const;
  std::string to_string() const;

  friend bool operator==(const SignedPower&, const SignedPower&) = default;
};

/// Strict order by numerical value.
bool less_than(const SignedPower& a, const SignedPower& b);

/// A Hecke-algebra module on which the smallest eigenvalue may appear.
struct ModuleInfo {
  std::string label;
  SignedPower eigenvalue;
  int within = 0;       // multiplicity of the eigenvalue inside the module
  BigInt generic_degree;
};

/// Candidate modules with their eigenvalues and generic degrees.
std::vector<ModuleInfo> module_table(const Descriptor& d);

struct LambdaMin {
  SignedPower value;
  std::vector<ModuleInfo> modules;  // all modules attaining the minimum
  /// True for type A of even rank, where eigenvector families are out of scope.
  bool even_rank_type_a = false;
};

LambdaMin lambda_min(const Descriptor& d);

/// Closed-form multiplicity from the module table: sum of within * generic degree.
BigInt closed_multiplicity(const LambdaMin& lm);

struct TableRow {
  std::string name;  // Cartan-style case, e.g. "B_{2n}(q), n=1"
  BigInt value;
};

/// Tabulated multiplicity for the descriptor's case; nullopt where no row exists
/// (hyperbolic polar spaces and oriflamme geometries of odd rank).
std::optional<TableRow> tabulated_multiplicity(const Descriptor& d);

/// Coefficients (f_1j, ..., f_lj) of F_j = sum_i f_ij T_i.
struct EigvecFamily {
  int j = 0;
  std::vector<std::int64_t> coeffs;
  std::int64_t eigenvalue = 0;  // module eigenvalue certified by the family
};

/// m = (n+1)/2 for type A of odd rank, n for types B and D. kEvenRankTypeA for even type A.
int family_count(const Descriptor& d);

/// Module eigenvalue of the spanning families: -q^{(n^2-1)/2}, -q^{(n-1)(n+e-1)}, -q^{(n-1)^2}.
std::int64_t module_eigenvalue(const Descriptor& d);

/// Throws kOutOfRangeIndex for j outside [1, m]. Oriflamme families use the e = 0 polar coefficients.
EigvecFamily eigvec_family(const Descriptor& d, int j);

/// The scalar lambda with Q v = lambda v, or nullopt if v is not an eigenvector.
std::optional<std::int64_t> quotient_eigenvalue(const IntMatrix& q, const std::vector<std::int64_t>& v);

inline std::int64_t eval_F(const TypeTable& types, const EigvecFamily& f, std::size_t flag, std::uint32_t x) {
  return f.coeffs[static_cast<std::size_t>(types.type(flag, x) - 1)];
}

/// F'_j(c, X) = F_j(c^+, X) + F_j(c^-, X) with `types` built on the host complex.
inline std::int64_t eval_F(const Oriflamme& o, const TypeTable& types, const EigvecFamily& f, std::size_t flag,
                           std::uint32_t x) {
  return eval_F(types, f, o.plus(flag), x) + eval_F(types, f, o.minus(flag), x);
}

/// chi_j^P(c) evaluated from subspace membership, without flag types.
std::int64_t eval_chi(const FlagComplex& fc, int j, std::uint32_t p, std::size_t flag);

}  // namespace oppflags
