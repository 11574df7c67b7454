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

#include <filesystem>
#include <optional>
#include <vector>

#include "oppflags/flag_complex.hpp"

namespace oppflags {

/// Cache directory: $OPPFLAGS_CACHE_DIR, else $XDG_CACHE_HOME/oppflags, else ~/.cache/oppflags.
std::filesystem::path default_cache_dir();

/// Sidecar file name keyed by descriptor, field modulus and tool version.
std::filesystem::path cache_file(const std::filesystem::path& dir, const Geometry& g);

/// Writes the enumeration; returns false (without throwing) when the file cannot be written.
bool save_complex(const std::filesystem::path& file, const FlagComplex& fc);

/// Reads an enumeration written by save_complex. Returns nullptr when the file is absent;
/// throws kCacheFormat when it exists but does not match `g`.
std::shared_ptr<const FlagComplex> load_complex(const std::filesystem::path& file,
                                                std::shared_ptr<const Geometry> g);

}  // namespace oppflags
