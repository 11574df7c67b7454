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

#include "oppflags/oriflamme.hpp"

#include "oppflags/error.hpp"

namespace oppflags {

Oriflamme::Oriflamme(std::shared_ptr<const FlagComplex> host) : host_(std::move(host)) {
  if (!host_->is_hyperbolic()) throw Error(ErrorCode::kNotHyperbolic, "oriflamme flags need a hyperbolic quadric");
  const int n = host_->length();
  if (host_->branching(n - 1) != 2) {
    throw Error(ErrorCode::kInadmissibleParameters, "a rank n-1 subspace must lie in exactly two generators");
  }
  plus_first_.resize(num_flags());
  for (std::size_t k = 0; k < num_flags(); ++k) {
    const auto a = host_->flag(2 * k)[static_cast<std::size_t>(n - 1)];
    const auto b = host_->flag(2 * k + 1)[static_cast<std::size_t>(n - 1)];
    const int ca = host_->generator_class(a);
    if (ca == host_->generator_class(b)) {
      throw Error(ErrorCode::kInadmissibleParameters, "generators through a rank n-1 subspace share a class");
    }
    plus_first_[k] = ca > 0;
  }
}

bool Oriflamme::is_opposite(std::size_t a, std::size_t b) const {
  if (rank() % 2 == 0) return host_->is_opposite(minus(a), minus(b)) && host_->is_opposite(plus(a), plus(b));
  return host_->is_opposite(minus(a), plus(b)) && host_->is_opposite(plus(a), minus(b));
}

void Oriflamme::opposite_flags(std::size_t c, std::vector<std::uint32_t>& out) const {
  // Host flags opposite c^- with the required class; the partner condition is then checked directly.
  out.clear();
  std::vector<std::uint32_t> host_nb;
  host_->opposite_flags(minus(c), host_nb);
  const bool even = rank() % 2 == 0;
  const std::size_t partner = plus(c);
  for (const auto d : host_nb) {
    const std::size_t k = from_host(d);
    const bool d_is_minus = minus(k) == d;
    if (d_is_minus != even) continue;
    const std::size_t other = even ? plus(k) : minus(k);
    if (host_->is_opposite(partner, other)) out.push_back(static_cast<std::uint32_t>(k));
  }
}

}  // namespace oppflags
