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


#include "oppflags/lifted.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "oppflags/error.hpp"
#include "oppflags/families.hpp"

namespace oppflags {

std::vector<std::size_t> sample_indices(std::size_t total, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> all(total);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (count == 0 || count >= total) return all;
  // Partial Fisher-Yates; modulo reduction keeps the draw independent of the
  // standard library's distribution implementation.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = i + static_cast<std::size_t>(rng() % (total - i));
    std::swap(all[i], all[k]);
  }
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

bool LiftedReport::ok() const {
  if (families.empty() || flags_checked == 0) return false;
  for (const auto& f : families) {
    if (f.failures != 0 || f.nonzero == 0) return false;
  }
  return true;
}

namespace {

struct Partial {
  std::vector<LiftedFamilyResult> families;
};

void check_range(const Instance& inst, const TypeTable& types, const std::vector<EigvecFamily>& fams,
                 std::span<const std::size_t> flags, bool component, Partial& out) {
  const std::size_t np = types.num_points();
  const int ell = types.num_types();
  const bool ori = inst.is_oriflamme();
  auto value = [&](const EigvecFamily& f, std::size_t c, std::uint32_t x) {
    if (!ori) return eval_F(types, f, c, x);
    return component ? eval_F(types, f, inst.oriflamme().plus(c), x) : eval_F(inst.oriflamme(), types, f, c, x);
  };
  std::vector<std::uint32_t> nb;
  // hist[x * ell + i - 1] counts host flags of type i among the neighbours.
  std::vector<std::int64_t> hist(np * static_cast<std::size_t>(ell));
  auto add = [&](std::size_t host_flag) {
    const auto row = types.row(host_flag);
    for (std::size_t x = 0; x < np; ++x) ++hist[x * static_cast<std::size_t>(ell) + row[x] - 1];
  };
  for (const auto c : flags) {
    nb.clear();
    inst.opposite_flags(c, nb);
    std::fill(hist.begin(), hist.end(), 0);
    for (const auto d : nb) {
      if (ori) {
        add(inst.oriflamme().plus(d));
        if (!component) add(inst.oriflamme().minus(d));
      } else {
        add(d);
      }
    }
    for (std::size_t fi = 0; fi < fams.size(); ++fi) {
      const auto& f = fams[fi];
      auto& res = out.families[fi];
      for (std::uint32_t x = 0; x < np; ++x) {
        std::int64_t lhs = 0;
        for (int i = 0; i < ell; ++i) lhs += hist[x * static_cast<std::size_t>(ell) + static_cast<std::size_t>(i)] * f.coeffs[static_cast<std::size_t>(i)];
        const std::int64_t self = value(f, c, x);
        ++res.checks;
        if (self != 0) ++res.nonzero;
        if (lhs != f.eigenvalue * self) {
          ++res.failures;
          if (!res.first_failure) res.first_failure = std::make_pair(c, x);
        }
      }
    }
  }
}

}  // namespace

LiftedReport verify_flag_eigenvectors(const Instance& inst, const TypeTable& types, const LiftedOptions& options) {
  const Descriptor& d = inst.descriptor();
  std::vector<EigvecFamily> fams;
  for (int j = 1; j <= family_count(d); ++j) fams.push_back(eigvec_family(d, j));

  const auto flags = sample_indices(inst.num_flags(), options.sample, options.seed);
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(flags.size())));
  std::vector<Partial> parts(jobs);
  for (auto& p : parts) {
    for (const auto& f : fams) p.families.push_back({f.j, f.eigenvalue, 0, 0, 0, std::nullopt});
  }
  const std::size_t chunk = (flags.size() + jobs - 1) / jobs;
  auto slice = [&](unsigned w) {
    const std::size_t lo = std::min(flags.size(), w * chunk);
    const std::size_t hi = std::min(flags.size(), lo + chunk);
    return std::span<const std::size_t>(flags.data() + lo, hi - lo);
  };
  if (jobs == 1) {
    check_range(inst, types, fams, slice(0), options.component, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] { check_range(inst, types, fams, slice(w), options.component, parts[w]); });
    }
    for (auto& t : workers) t.join();
  }

  LiftedReport report;
  report.flags_checked = flags.size();
  report.points = types.num_points();
  report.exhaustive = flags.size() == inst.num_flags();
  report.families = parts[0].families;
  // Workers own contiguous ascending slices, so the first failure in worker
  // order is the first failure overall.
  for (unsigned w = 1; w < jobs; ++w) {
    for (std::size_t fi = 0; fi < fams.size(); ++fi) {
      auto& dst = report.families[fi];
      const auto& src = parts[w].families[fi];
      dst.checks += src.checks;
      dst.failures += src.failures;
      dst.nonzero += src.nonzero;
      if (!dst.first_failure) dst.first_failure = src.first_failure;
    }
  }
  return report;
}

ChiReport compare_chi(const Instance& inst, const TypeTable& types) {
  if (inst.is_oriflamme()) throw Error(ErrorCode::kUnsupported, "chi is defined on types A and B");
  const Descriptor& d = inst.descriptor();
  ChiReport report;
  for (int j = 1; j <= family_count(d); ++j) {
    const auto f = eigvec_family(d, j);
    for (std::size_t c = 0; c < types.num_flags(); ++c) {
      for (std::uint32_t p = 0; p < types.num_points(); ++p) {
        ++report.checks;
        const auto chi = eval_chi(inst.complex(), j, p, c);
        const auto F = eval_F(types, f, c, p);
        if (chi == F) continue;
        ++report.mismatches;
        if (!report.first_mismatch) {
          report.first_mismatch = "j=" + std::to_string(j) + " flag=" + std::to_string(c) + " point=" +
                                  std::to_string(p) + ": chi " + std::to_string(chi) + ", F " + std::to_string(F);
        }
      }
    }
  }
  return report;
}

}  // namespace oppflags
