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


#include "oppflags/multiplicity.hpp"

#include "oppflags/error.hpp"

namespace oppflags {

namespace {

// Dense A^2 - mu I over the opposition graph, for the irrational case.
ModularRank squared_rank(const Instance& inst, const BigInt& mu, std::size_t budget) {
  const std::size_t dim = inst.num_flags();
  if (dim > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(dim) + " vertices exceed the dense nullity budget of " + std::to_string(budget));
  }
  std::vector<std::vector<std::uint32_t>> adj(dim);
  for (std::size_t v = 0; v < dim; ++v) inst.opposite_flags(v, adj[v]);
  const auto shift = to_int64(mu, "squared eigenvalue");
  const std::uint64_t bound = 2 * (adj.empty() ? 0 : adj[0].size() * adj[0].size()) + static_cast<std::uint64_t>(shift);
  const auto source = [&](std::size_t r, std::span<std::int64_t> out) {
    for (const auto a : adj[r]) {
      for (const auto b : adj[a]) out[b] += 1;
    }
    out[r] -= shift;
  };
  auto rank = rank_modular(dim, dim, source, kDefaultPrimes, bound);
  if (!rank.agree()) throw Error(ErrorCode::kPrimeDisagreement, "ranks of A^2 - mu I differ across primes");
  return rank;
}

}  // namespace

MultiplicityReport multiplicity(const Instance& inst, const MultiplicityOptions& options) {
  const Descriptor& d = inst.descriptor();
  MultiplicityReport report;
  report.descriptor = d.to_string();
  report.lambda_min = lambda_min(d);
  report.modules = module_table(d);
  const QPower q(d.q);
  report.lambda_value = report.lambda_min.value.value(q);
  report.closed = closed_multiplicity(report.lambda_min);
  report.table = tabulated_multiplicity(d);
  if (!options.empirical) return report;

  const std::size_t dim = inst.num_flags();
  if (report.lambda_value) {
    const auto lambda = to_int64(*report.lambda_value, "lambda_min");
    const auto r = nullity_for_eigenvalue(
        [&inst](std::size_t v, std::vector<std::uint32_t>& out) { inst.opposite_flags(v, out); }, dim, lambda,
        kDefaultPrimes, options.budget);
    report.empirical = r.value;
    report.empirical_rank = r.rank;
  } else {
    const BigInt mu = to_integer(q.pow(report.lambda_min.value.exponent * 2), "squared eigenvalue");
    const auto rank = squared_rank(inst, mu, options.budget);
    const std::size_t both = dim - rank.value;
    if (both % 2 != 0) throw Error(ErrorCode::kNonIntegerResult, "odd nullity for a conjugate pair");
    report.empirical = both / 2;
    report.empirical_rank = rank;
  }
  const bool closed = BigInt(*report.empirical) == report.closed;
  const bool table = report.table && BigInt(*report.empirical) == report.table->value;
  report.matching = closed && table ? "both" : closed ? "closed" : table ? "table" : "neither";
  return report;
}

}  // namespace oppflags
