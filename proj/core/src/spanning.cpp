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


#include "oppflags/spanning.hpp"

#include <cstdlib>

#include "oppflags/families.hpp"

namespace oppflags {

bool SpanningReport::ok() const {
  if (!rank.agree() || BigInt(rank.value) != expected) return false;
  if (exact_rank && *exact_rank != rank.value) return false;
  if (drop_one_rank) {
    if (!drop_one_rank->agree() || drop_one_rank->value != rank.value) return false;
    if (drop_one_cols && *drop_one_cols != rank.value) return false;
  }
  return true;
}

SpanningReport spanning_rank(const Instance& inst, const TypeTable& types, const SpanningOptions& options) {
  const Descriptor& d = inst.descriptor();
  std::vector<EigvecFamily> fams;
  for (int j = 1; j <= family_count(d); ++j) fams.push_back(eigvec_family(d, j));
  const std::size_t np = types.num_points();
  std::uint64_t bound = 0;
  for (const auto& f : fams) {
    for (const auto c : f.coeffs) bound = std::max<std::uint64_t>(bound, static_cast<std::uint64_t>(std::llabs(c)));
  }
  if (inst.is_oriflamme() && !options.component) bound *= 2;

  SpanningReport report;
  report.rows = inst.num_flags();
  report.cols = fams.size() * np;
  report.expected = static_cast<long long>(fams.size()) * module_table(d).front().generic_degree;

  // skip: point dropped from every family, or np to keep all columns.
  auto make_source = [&](std::size_t skip) {
    return [&, skip](std::size_t r, std::span<std::int64_t> out) {
      std::size_t col = 0;
      for (const auto& f : fams) {
        for (std::uint32_t x = 0; x < np; ++x) {
          if (x == skip) continue;
          if (!inst.is_oriflamme()) {
            out[col++] = eval_F(types, f, r, x);
          } else if (options.component) {
            out[col++] = eval_F(types, f, inst.oriflamme().plus(r), x);
          } else {
            out[col++] = eval_F(inst.oriflamme(), types, f, r, x);
          }
        }
      }
    };
  };
  report.rank = rank_modular(report.rows, report.cols, make_source(np), kDefaultPrimes, bound);
  if (report.rows * report.cols <= options.exact_budget) {
    IntMatrix m(report.rows, report.cols, 0);
    const auto source = make_source(np);
    for (std::size_t r = 0; r < report.rows; ++r) source(r, m.row(r));
    report.exact_rank = rank_exact(m, options.exact_budget);
  }
  if (d.kind == Kind::kA) {
    report.drop_one_cols = fams.size() * (np - 1);
    report.drop_one_rank = rank_modular(report.rows, *report.drop_one_cols, make_source(0), kDefaultPrimes, bound);
  }
  return report;
}

}  // namespace oppflags
