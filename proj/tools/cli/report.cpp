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


#include "cli/report.hpp"

#include <oppflags/instance.hpp>

namespace oppflags::cli {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "fail";
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (c.status == Status::kFail) return false;
  }
  return true;
}

void Report::expect(std::string name, Json expected, Json actual, std::string provenance, std::string anchor) {
  Check c;
  c.name = std::move(name);
  c.status = expected == actual ? Status::kPass : Status::kFail;
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.provenance = std::move(provenance);
  c.anchor = std::move(anchor);
  add(std::move(c));
}

void Report::skip(std::string name, std::string reason, std::string provenance, std::string anchor) {
  Check c;
  c.name = std::move(name);
  c.status = Status::kSkipped;
  c.provenance = std::move(provenance);
  c.anchor = std::move(anchor);
  c.detail = std::move(reason);
  add(std::move(c));
}

Json to_json(const Report& r) {
  Json j;
  j["schema"] = 1;
  j["instance"] = r.instance;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["tool_version"] = std::string(tool_version());
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = std::string(status_name(c.status));
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["provenance"] = c.provenance;
    e["anchor"] = c.anchor;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (!r.data.empty()) j["data"] = r.data;
  if (r.timing) j["timing"] = *r.timing;
  return j;
}

void write_json(const Report& r, std::ostream& out) { out << to_json(r).dump(2) << '\n'; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string flat(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

void write_csv(const Report& r, std::ostream& out) {
  out << "instance,suite,seed,tool_version,name,status,expected,actual,provenance,anchor,detail\n";
  for (const auto& c : r.checks) {
    out << csv_field(r.instance) << ',' << csv_field(r.suite) << ',' << r.seed << ','
        << csv_field(std::string(tool_version())) << ',' << csv_field(c.name) << ',' << status_name(c.status) << ','
        << csv_field(flat(c.expected)) << ',' << csv_field(flat(c.actual)) << ',' << csv_field(c.provenance) << ','
        << csv_field(c.anchor) << ',' << csv_field(c.detail) << '\n';
  }
}

}  // namespace oppflags::cli
