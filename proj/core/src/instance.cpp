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

#include "oppflags/instance.hpp"

#include "oppflags/error.hpp"
#include "oppflags/flag_cache.hpp"

#ifndef OPPFLAGS_VERSION_STRING
#define OPPFLAGS_VERSION_STRING "0.0.0"
#endif

namespace oppflags {

std::string_view tool_version() { return OPPFLAGS_VERSION_STRING; }

Instance Instance::load(std::string_view descriptor, const LoadOptions& options) {
  return load(Descriptor::parse(descriptor), options);
}

Instance Instance::load(const Descriptor& d, const LoadOptions& options) {
  Instance inst;
  inst.desc_ = d;
  inst.geometry_ = std::make_shared<const Geometry>(Geometry::build(d));
  if (options.use_cache) {
    const auto dir = options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
    const auto file = cache_file(dir, *inst.geometry_);
    try {
      inst.complex_ = load_complex(file, inst.geometry_);
      inst.from_cache_ = inst.complex_ != nullptr;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCacheFormat) throw;
      inst.complex_ = nullptr;
    }
    if (!inst.complex_) {
      inst.complex_ = FlagComplex::build(inst.geometry_);
      save_complex(file, *inst.complex_);
    }
  } else {
    inst.complex_ = FlagComplex::build(inst.geometry_);
  }
  if (d.kind == Kind::kD) inst.oriflamme_.emplace(inst.complex_);
  return inst;
}

std::size_t Instance::num_flags() const {
  return oriflamme_ ? oriflamme_->num_flags() : complex_->num_flags();
}

bool Instance::is_opposite(std::size_t a, std::size_t b) const {
  return oriflamme_ ? oriflamme_->is_opposite(a, b) : complex_->is_opposite(a, b);
}

void Instance::opposite_flags(std::size_t c, std::vector<std::uint32_t>& out) const {
  if (oriflamme_) {
    oriflamme_->opposite_flags(c, out);
  } else {
    complex_->opposite_flags(c, out);
  }
}

}  // namespace oppflags
