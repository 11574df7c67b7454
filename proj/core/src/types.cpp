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

#include "oppflags/types.hpp"

#include <algorithm>

namespace oppflags {

int flag_type(const FlagComplex& fc, std::size_t c, std::uint32_t x) {
  const int n = fc.length();
  for (int k = 1; k <= n; ++k) {
    if (fc.flag_member(c, k).pts.test(x)) return k;
  }
  if (!fc.is_polar()) return n + 1;
  for (int t = n - 1; t >= 1; --t) {
    if (fc.flag_member(c, t).perp.test(x)) return 2 * n - t;
  }
  return 2 * n;
}

TypeTable TypeTable::build(const FlagComplex& fc) {
  TypeTable t;
  const int n = fc.length();
  t.ell_ = fc.is_polar() ? 2 * n : n + 1;
  t.flags_ = fc.num_flags();
  t.points_ = fc.geometry().num_points();
  t.data_.assign(t.flags_ * t.points_, static_cast<std::uint8_t>(t.ell_));
  for (std::size_t c = 0; c < t.flags_; ++c) {
    std::uint8_t* row = t.data_.data() + c * t.points_;
    // walk the chain outwards; later (larger) members only claim unclaimed points
    for (int k = n; k >= 1; --k) {
      fc.flag_member(c, k).pts.for_each([&](std::size_t p) { row[p] = static_cast<std::uint8_t>(k); });
    }
    if (!fc.is_polar()) continue;
    for (int tt = 1; tt <= n - 1; ++tt) {
      const auto type = static_cast<std::uint8_t>(2 * n - tt);
      fc.flag_member(c, tt).perp.for_each([&](std::size_t p) {
        if (row[p] > type) row[p] = type;
      });
    }
  }
  return t;
}

std::vector<std::size_t> TypeTable::class_sizes(std::uint32_t x) const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(ell_), 0);
  for (std::size_t c = 0; c < flags_; ++c) ++sizes[static_cast<std::size_t>(type(c, x) - 1)];
  return sizes;
}

std::vector<std::uint32_t> TypeTable::class_members(std::uint32_t x, int i) const {
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < flags_; ++c) {
    if (type(c, x) == i) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

std::vector<std::uint32_t> representative_points(std::size_t num_points, std::size_t count) {
  std::vector<std::uint32_t> out;
  if (num_points == 0) return out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t p = count == 1 ? 0 : i * (num_points - 1) / (count - 1);
    out.push_back(static_cast<std::uint32_t>(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oppflags
