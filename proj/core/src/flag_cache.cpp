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

#include "oppflags/flag_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include "oppflags/error.hpp"
#include "oppflags/instance.hpp"

namespace oppflags {

namespace {

constexpr char kMagic[4] = {'O', 'P', 'F', 'C'};
constexpr std::uint32_t kFormat = 1;

// Native-endian, fixed-width fields.
class Writer {
 public:
  explicit Writer(std::ofstream& out) : out_(out) {}
  void u32(std::uint32_t v) { out_.write(reinterpret_cast<const char*>(&v), sizeof v); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }

 private:
  std::ofstream& out_;
};

class Reader {
 public:
  explicit Reader(std::ifstream& in) : in_(in) {}
  std::uint32_t u32() {
    std::uint32_t v = 0;
    in_.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in_) throw Error(ErrorCode::kCacheFormat, "truncated cache file");
    return v;
  }
  std::string str() {
    const std::uint32_t len = u32();
    if (len > (1u << 20)) throw Error(ErrorCode::kCacheFormat, "corrupt string length");
    std::string s(len, '\0');
    in_.read(s.data(), len);
    if (!in_) throw Error(ErrorCode::kCacheFormat, "truncated cache file");
    return s;
  }

 private:
  std::ifstream& in_;
};

std::string modulus_string(const Geometry& g) {
  std::string s;
  for (const auto c : g.field().modulus()) s += std::to_string(c) + ".";
  return s;
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("OPPFLAGS_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "oppflags";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "oppflags";
  return std::filesystem::temp_directory_path() / "oppflags";
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const Geometry& g) {
  std::string name = g.descriptor().to_string();
  for (auto& ch : name) {
    if (ch == ':') ch = '_';
  }
  std::string mod;
  for (const auto c : g.field().modulus()) mod += std::to_string(c);
  return dir / (name + "-m" + mod + "-v" + std::string(tool_version()) + ".ofc");
}

bool save_complex(const std::filesystem::path& file, const FlagComplex& fc) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    Writer w(out);
    out.write(kMagic, sizeof kMagic);
    w.u32(kFormat);
    w.str(std::string(tool_version()));
    w.str(fc.geometry().descriptor().to_string());
    w.str(modulus_string(fc.geometry()));
    const auto levels = fc.level_bases();
    w.u32(static_cast<std::uint32_t>(levels.size()));
    for (const auto& level : levels) {
      w.u32(static_cast<std::uint32_t>(level.size()));
      for (const auto& sub : level) {
        w.u32(static_cast<std::uint32_t>(sub.rank));
        for (const auto x : sub.rref) w.u32(x.index);
      }
    }
    for (const auto& lists : fc.incidence()) {
      w.u32(static_cast<std::uint32_t>(lists.size()));
      for (const auto& list : lists) {
        w.u32(static_cast<std::uint32_t>(list.size()));
        for (const auto id : list) w.u32(id);
      }
    }
    if (!out) return false;
  }
  std::filesystem::rename(tmp, file, ec);
  return !ec;
}

std::shared_ptr<const FlagComplex> load_complex(const std::filesystem::path& file,
                                                std::shared_ptr<const Geometry> g) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return nullptr;
  char magic[4] = {};
  in.read(magic, sizeof magic);
  if (!in || !std::equal(magic, magic + 4, kMagic)) throw Error(ErrorCode::kCacheFormat, "bad magic in " + file.string());
  Reader r(in);
  if (r.u32() != kFormat) throw Error(ErrorCode::kCacheFormat, "unsupported cache format");
  if (r.str() != tool_version()) throw Error(ErrorCode::kCacheFormat, "cache written by another version");
  if (r.str() != g->descriptor().to_string()) throw Error(ErrorCode::kCacheFormat, "cache is for another instance");
  if (r.str() != modulus_string(*g)) throw Error(ErrorCode::kCacheFormat, "cache uses another field modulus");
  const std::uint32_t nlevels = r.u32();
  if (nlevels != static_cast<std::uint32_t>(g->descriptor().n)) throw Error(ErrorCode::kCacheFormat, "level count mismatch");
  const int dim = g->dim();
  std::vector<std::vector<Subspace>> levels(nlevels);
  for (auto& level : levels) {
    const std::uint32_t count = r.u32();
    level.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
      Subspace s;
      s.rank = static_cast<int>(r.u32());
      s.dim = dim;
      if (s.rank < 0 || s.rank > dim) throw Error(ErrorCode::kCacheFormat, "bad subspace rank");
      s.rref.resize(static_cast<std::size_t>(s.rank * dim));
      for (auto& x : s.rref) {
        x.index = r.u32();
        if (x.index >= g->field().order()) throw Error(ErrorCode::kCacheFormat, "bad field element");
      }
      level.push_back(std::move(s));
    }
  }
  std::vector<std::vector<std::vector<std::uint32_t>>> children(nlevels);
  for (std::uint32_t lv = 0; lv < nlevels; ++lv) {
    const std::uint32_t count = r.u32();
    children[lv].resize(count);
    const std::size_t next_size = lv + 1 < nlevels ? levels[lv + 1].size() : 0;
    for (auto& list : children[lv]) {
      list.resize(r.u32());
      for (auto& id : list) {
        id = r.u32();
        if (id >= next_size) throw Error(ErrorCode::kCacheFormat, "bad incidence entry");
      }
    }
  }
  return FlagComplex::from_levels(std::move(g), std::move(levels), std::move(children));
}

}  // namespace oppflags
