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
#include <optional>
#include <string>
#include <vector>

#include <oppflags/instance.hpp>
#include <oppflags/types.hpp>

#include "cli/report.hpp"

namespace oppflags::cli {

struct SuiteOptions {
  std::size_t sample = 0;  // 0: exhaustive up to kAutoExhaustive flags, else kAutoSample
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool empirical = false;
};

inline constexpr std::size_t kAutoExhaustive = 5000;
inline constexpr std::size_t kAutoSample = 1000;

class Context {
 public:
  Context(Instance inst, SuiteOptions options) : inst_(std::move(inst)), options_(options) {}

  const Instance& instance() const noexcept { return inst_; }
  const Descriptor& descriptor() const noexcept { return inst_.descriptor(); }
  const SuiteOptions& options() const noexcept { return options_; }
  /// Flag types of the complex (the host complex for oriflamme instances), built once.
  const TypeTable& types();
  /// Number of flags verified by sampled suites.
  std::size_t effective_sample() const;

 private:
  Instance inst_;
  SuiteOptions options_;
  std::optional<TypeTable> types_;
};

using Suite = void (*)(Context&, Report&);

/// Named suites in report order; "report-all" is not among them.
const std::vector<std::pair<std::string, Suite>>& suites();

/// Whether report-all runs the suite on this descriptor.
bool applicable(const std::string& suite, const Descriptor& d);

void run_enumerate(Context& ctx, Report& r);
void run_quotient(Context& ctx, Report& r);
void run_eigvec(Context& ctx, Report& r);
void run_chi(Context& ctx, Report& r);
void run_triangular(Context& ctx, Report& r);
void run_scheme(Context& ctx, Report& r);
void run_spanning(Context& ctx, Report& r);
void run_multiplicity(Context& ctx, Report& r);
void run_structure(Context& ctx, Report& r);

}  // namespace oppflags::cli
