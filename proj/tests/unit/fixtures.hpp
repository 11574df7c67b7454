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

#include <fstream>
#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include <oppflags/exact_linalg.hpp>
#include <oppflags/instance.hpp>
#include <oppflags/types.hpp>

namespace oppflags::testing {

struct Loaded {
  Instance inst;
  TypeTable types;
};

/// Builds each instance once per test binary.
inline const Loaded& load(const std::string& text) {
  static std::map<std::string, std::unique_ptr<Loaded>> cache;
  auto it = cache.find(text);
  if (it == cache.end()) {
    auto inst = Instance::load(text);
    auto types = TypeTable::build(inst.complex());
    it = cache.emplace(text, std::make_unique<Loaded>(Loaded{std::move(inst), std::move(types)})).first;
  }
  return *it->second;
}

/// Values frozen from tests/oracles/brute_force_oracle.py, keyed by descriptor.
inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(OPPFLAGS_ORACLE_FILE);
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline IntMatrix to_matrix(const nlohmann::json& rows) {
  IntMatrix m(rows.size(), rows.at(0).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows.at(i).at(j).get<std::int64_t>();
  }
  return m;
}

}  // namespace oppflags::testing
