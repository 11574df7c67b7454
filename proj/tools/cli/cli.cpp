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


#include "cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <thread>

#include <CLI11.hpp>
#include <oppflags/error.hpp>

#include "cli/report.hpp"
#include "cli/suites.hpp"

namespace oppflags::cli {

namespace {

struct Args {
  std::string command;
  std::string descriptor;
  std::string out;
  std::string format = "json";
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  bool empirical = false;
  bool no_cache = false;
  bool timing = false;
};

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kCriterionViolated:
    case ErrorCode::kEigenIdentityViolated:
    case ErrorCode::kRepresentativeDisagreement:
    case ErrorCode::kPrimeDisagreement:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Opposition graphs of maximal flags in finite classical geometries", "oppflags"};
  app.require_subcommand(1);
  Args a;
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.first);
  names.push_back("report-all");
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name, "Run the " + name + " suite");
    sub->add_option("descriptor", a.descriptor, "A:<n>:<q> | B:<n>:<2e>:<q>:<form> | D:<n>:<q>")->required();
    sub->add_option("--out", a.out, "Write the report to this file instead of stdout");
    sub->add_option("--format", a.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--sample", a.sample, "Flags to verify in sampled suites (0: automatic)");
    sub->add_option("--seed", a.seed, "Seed for sampled suites");
    sub->add_option("--jobs", a.jobs, "Worker threads (default: available cores)");
    sub->add_flag("--empirical", a.empirical, "Compute the nullity of A - lambda_min I");
    sub->add_flag("--no-cache", a.no_cache, "Do not read or write the enumeration cache");
    sub->add_flag("--timing", a.timing, "Include per-suite timings (reports are then not reproducible)");
    sub->callback([&a, name] { a.command = name; });
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "oppflags: " << e.what() << '\n';
    if (a.command.empty() && !args.empty() && std::find(names.begin(), names.end(), args.front()) == names.end()) {
      err << "subcommands:";
      for (const auto& n : names) err << ' ' << n;
      err << '\n';
    }
    return 1;
  }

  SuiteOptions options;
  options.sample = a.sample;
  options.seed = a.seed;
  options.jobs = a.jobs != 0 ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  // report-all includes empirical nullities whenever they fit the budget.
  options.empirical = a.empirical || a.command == "report-all";

  Report report;
  report.suite = a.command;
  report.seed = a.seed;
  try {
    LoadOptions lo;
    lo.use_cache = !a.no_cache;
    Context ctx(Instance::load(a.descriptor, lo), options);
    report.instance = ctx.descriptor().to_string();
    Json timing = Json::object();
    for (const auto& [name, fn] : suites()) {
      const bool all = a.command == "report-all";
      if (all ? !applicable(name, ctx.descriptor()) : name != a.command) continue;
      const auto t0 = std::chrono::steady_clock::now();
      Report part;
      fn(ctx, part);
      timing[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (auto& c : part.checks) {
        if (all) c.name = name + "/" + c.name;
        report.add(std::move(c));
      }
      if (all) {
        if (!part.data.empty()) report.data[name] = std::move(part.data);
      } else {
        report.data = std::move(part.data);
      }
    }
    if (a.timing) report.timing = std::move(timing);
  } catch (const Error& e) {
    err << "oppflags: " << e.what() << '\n';
    return exit_for(e);
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) {
      err << "oppflags: cannot write " << a.out << '\n';
      return 1;
    }
    sink = &file;
  }
  if (a.format == "csv") {
    write_csv(report, *sink);
  } else {
    write_json(report, *sink);
  }
  return report.passed() ? 0 : 2;
}

}  // namespace oppflags::cli
