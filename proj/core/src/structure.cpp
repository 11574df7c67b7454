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


#include "oppflags/structure.hpp"

#include "oppflags/error.hpp"
#include "oppflags/families.hpp"
#include "oppflags/lifted.hpp"

namespace oppflags {

bool StructureReport::ok() const {
  if (edges == 0 || class_violations != 0 || partner_violations != 0 || degree_mismatches != 0) return false;
  for (const auto& row : spectrum) {
    if (!row.ok) return false;
  }
  return true;
}

StructureReport verify_structure(const Instance& inst, const StructureOptions& options) {
  if (!inst.is_oriflamme()) throw Error(ErrorCode::kUnsupported, "structure check needs an oriflamme instance");
  const Oriflamme& o = inst.oriflamme();
  const FlagComplex& host = o.host();
  const bool even = o.rank() % 2 == 0;
  StructureReport report;
  report.n = o.rank();
  const auto flags = sample_indices(o.num_flags(), options.sample, options.seed);
  report.exhaustive = flags.size() == o.num_flags();

  auto partner = [&](std::size_t a) {
    const std::size_t k = Oriflamme::from_host(a);
    return o.minus(k) == a ? o.plus(k) : o.minus(k);
  };
  std::vector<std::uint32_t> nb;
  std::vector<std::uint32_t> dnb;
  for (const auto k : flags) {
    dnb.clear();
    o.opposite_flags(k, dnb);
    for (const std::size_t a : {o.minus(k), o.plus(k)}) {
      ++report.host_flags;
      nb.clear();
      host.opposite_flags(a, nb);
      if (nb.size() != dnb.size()) ++report.degree_mismatches;
      const bool a_minus = o.minus(k) == a;
      for (const auto b : nb) {
        ++report.edges;
        const bool b_minus = o.minus(Oriflamme::from_host(b)) == b;
        if ((a_minus == b_minus) != even) ++report.class_violations;
        if (!host.is_opposite(partner(a), partner(b))) ++report.partner_violations;
      }
    }
  }

  const std::size_t host_dim = host.num_flags();
  if (!report.exhaustive || host_dim > options.budget) return report;
  const auto host_nb = [&host](std::size_t v, std::vector<std::uint32_t>& out) { host.opposite_flags(v, out); };
  const auto d_nb = [&o](std::size_t v, std::vector<std::uint32_t>& out) { o.opposite_flags(v, out); };
  const Descriptor& d = inst.descriptor();
  const QPower q(d.q);
  const std::int64_t small = -module_eigenvalue(d);
  const std::int64_t valency = to_int64(to_integer(q.pow(d.n * (d.n - 1)), "valency"), "valency");
  for (const std::int64_t lambda : {-valency, -small, small, valency}) {
    SpectrumRow row;
    row.lambda = lambda;
    row.host = nullity_for_eigenvalue(host_nb, host_dim, lambda, kDefaultPrimes, options.budget).value;
    row.plus = nullity_for_eigenvalue(d_nb, o.num_flags(), lambda, kDefaultPrimes, options.budget).value;
    row.minus = nullity_for_eigenvalue(d_nb, o.num_flags(), -lambda, kDefaultPrimes, options.budget).value;
    row.ok = even ? row.host == 2 * row.plus : row.host == row.plus + row.minus;
    report.spectrum.push_back(row);
  }
  return report;
}

}  // namespace oppflags
