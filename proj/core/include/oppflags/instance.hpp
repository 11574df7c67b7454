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
#include <filesystem>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "oppflags/descriptor.hpp"
#include "oppflags/flag_complex.hpp"
#include "oppflags/geometry.hpp"
#include "oppflags/oriflamme.hpp"

namespace oppflags {

std::string_view tool_version();

struct LoadOptions {
  bool use_cache = false;
  std::filesystem::path cache_dir;  // empty: default_cache_dir()
};

/// A built geometry with its maximal flags. For oriflamme descriptors the
/// complex is the hyperbolic host and `oriflamme` holds the paired flags.
class Instance {
 public:
  static Instance load(const Descriptor& d, const LoadOptions& options = {});
  static Instance load(std::string_view descriptor, const LoadOptions& options = {});

  const Descriptor& descriptor() const noexcept { return desc_; }
  const Geometry& geometry() const noexcept { return *geometry_; }
  const FlagComplex& complex() const noexcept { return *complex_; }
  std::shared_ptr<const FlagComplex> complex_ptr() const noexcept { return complex_; }
  bool is_oriflamme() const noexcept { return oriflamme_.has_value(); }
  const Oriflamme& oriflamme() const { return *oriflamme_; }

  /// Vertices of the opposition graph (oriflamme flags for type D).
  std::size_t num_flags() const;
  bool is_opposite(std::size_t a, std::size_t b) const;
  void opposite_flags(std::size_t c, std::vector<std::uint32_t>& out) const;

  /// True when the complex was read from the cache.
  bool from_cache() const noexcept { return from_cache_; }

 private:
  Descriptor desc_;
  std::shared_ptr<const Geometry> geometry_;
  std::shared_ptr<const FlagComplex> complex_;
  std::optional<Oriflamme> oriflamme_;
  bool from_cache_ = false;
};

}  // namespace oppflags
