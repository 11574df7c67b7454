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
#include <memory>
#include <vector>

#include "oppflags/flag_complex.hpp"

namespace oppflags {

/// Oriflamme flags (U_1, ..., U_{n-2}, U_n^-, U_n^+) of a hyperbolic quadric.
///
/// Each chain U_1 < ... < U_{n-1} lies in exactly two generators, one per class,
/// so oriflamme flag k corresponds to the host flags 2k and 2k+1.
class Oriflamme {
 public:
  /// Throws kNotHyperbolic unless the host is a hyperbolic quadric.
  explicit Oriflamme(std::shared_ptr<const FlagComplex> host);

  const FlagComplex& host() const noexcept { return *host_; }
  int rank() const noexcept { return host_->length(); }
  std::size_t num_flags() const noexcept { return host_->num_flags() / 2; }

  /// Host flag through the generator of class minus (resp. plus).
  std::size_t minus(std::size_t k) const { return 2 * k + (plus_first_[k] ? 1 : 0); }
  std::size_t plus(std::size_t k) const { return 2 * k + (plus_first_[k] ? 0 : 1); }
  /// Oriflamme flag containing a host flag.
  static std::size_t from_host(std::size_t host_flag) noexcept { return host_flag / 2; }

  /// n even: c^- opp d^- and c^+ opp d^+. n odd: c^- opp d^+ and c^+ opp d^-.
  bool is_opposite(std::size_t a, std::size_t b) const;
  /// Replaces `out` with the oriflamme flags opposite `c`, ascending.
  void opposite_flags(std::size_t c, std::vector<std::uint32_t>& out) const;

 private:
  std::shared_ptr<const FlagComplex> host_;
  std::vector<bool> plus_first_;
};

}  // namespace oppflags
