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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace oppflags::cli {

using Json = nlohmann::ordered_json;

enum class Status { kPass, kFail, kSkipped };

std::string_view status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::kPass;
  Json expected;
  Json actual;
  std::string provenance;  // paper, derived or trivial
  std::string anchor;
  std::string detail;
};

struct Report {
  std::string instance;
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  /// Extra instance data (matrices, module tables); emitted after the checks.
  Json data = Json::object();
  /// Seconds per suite; emitted only when requested.
  std::optional<Json> timing;

  bool passed() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  /// Equality check with status derived from expected == actual.
  void expect(std::string name, Json expected, Json actual, std::string provenance, std::string anchor);
  void skip(std::string name, std::string reason, std::string provenance, std::string anchor);
};

Json to_json(const Report& r);
void write_json(const Report& r, std::ostream& out);
void write_csv(const Report& r, std::ostream& out);

}  // namespace oppflags::cli
