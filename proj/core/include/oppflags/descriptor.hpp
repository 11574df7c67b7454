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

#include <cstdint>
#include <string>
#include <string_view>

#include "oppflags/qpower.hpp"

namespace oppflags {

enum class Kind { kA, kB, kD };

enum class FormKind { kNone, kSymplectic, kParabolic, kHyperbolic, kElliptic, kHermitian };

/// Parsed instance descriptor: `A:<n>:<q>`, `B:<n>:<2e>:<q>:<form>` or `D:<n>:<q>`.
struct Descriptor {
  Kind kind = Kind::kA;
  int n = 0;
  int two_e = 0;
  std::uint32_t q = 0;
  FormKind form = FormKind::kNone;

  HalfInt e() const { return HalfInt::halves(two_e); }
  /// Vector-space dimension of the ambient space.
  int ambient_dim() const;
  /// Rank of the maximal flags: n for all three kinds.
  int flag_length() const { return n; }
  /// Number of point types l: n+1 for A, 2n for B (D uses its B embedding).
  int num_types() const { return kind == Kind::kA ? n + 1 : 2 * n; }

  std::string to_string() const;
  /// Human-readable name such as W(3,2) or Q+(7,2).
  std::string geometry_name() const;

  /// Throws kInadmissibleParameters or kNonSquareFieldForHalfIntegerE.
  static Descriptor parse(std::string_view text);

  /// Oriflamme of rank 3 is rejected by `parse`; tests construct it through this hook.
  static Descriptor oriflamme_unchecked(int n, std::uint32_t q);
  /// The hyperbolic polar space whose generators carry the oriflamme.
  Descriptor hyperbolic_host() const;

  friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

std::string_view form_name(FormKind f);

/// Validates a descriptor built by hand; `parse` calls this.
void validate(const Descriptor& d);

}  // namespace oppflags
