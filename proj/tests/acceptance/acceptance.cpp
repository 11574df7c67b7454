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


// Acceptance gate: one pass/fail line per criterion, each with a pinned time limit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <oppflags/counts.hpp>
#include <oppflags/error.hpp>
#include <oppflags/families.hpp>
#include <oppflags/instance.hpp>
#include <oppflags/lifted.hpp>
#include <oppflags/multiplicity.hpp>
#include <oppflags/point_scheme.hpp>
#include <oppflags/quotient.hpp>
#include <oppflags/spanning.hpp>
#include <oppflags/structure.hpp>
#include <oppflags/triangular.hpp>
#include <oppflags/types.hpp>

namespace {

using namespace oppflags;

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kSample = 1000;

// Failures are collected per criterion; details name the instance and the offending value.
class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  bool passed() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + ("FAILED " + f);
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Loaded {
  Instance inst;
  TypeTable types;
};

// Instances are built once per process and shared between criteria.
const Loaded& load(const std::string& text) {
  static std::map<std::string, std::unique_ptr<Loaded>> cache;
  auto it = cache.find(text);
  if (it == cache.end()) {
    auto inst = Instance::load(text);
    auto types = TypeTable::build(inst.complex());
    it = cache.emplace(text, std::make_unique<Loaded>(Loaded{std::move(inst), std::move(types)})).first;
  }
  return *it->second;
}

std::string show(const IntMatrix& m) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s << (i ? ",(" : "(");
    for (std::size_t j = 0; j < m.cols(); ++j) s << (j ? "," : "") << m(i, j);
    s << ")";
  }
  s << "]";
  return s.str();
}

IntMatrix rows(std::initializer_list<std::initializer_list<std::int64_t>> r) {
  IntMatrix m(r.size(), r.begin()->size());
  std::size_t i = 0;
  for (const auto& row : r) {
    std::size_t j = 0;
    for (auto v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

void quotient_matches(Outcome& o, const std::string& text, bool worked_example) {
  const auto& l = load(text);
  const auto closed = closed_form_quotient(l.inst.descriptor()).entries;
  const auto emp = empirical_quotient(l.inst, l.types).entries;
  o.require(emp == closed, text + " empirical " + show(emp) + " vs closed " + show(closed));
  if (worked_example) {
    const auto ex = worked_example_quotient(l.inst.descriptor());
    o.require(ex && *ex == emp, text + " worked example differs from " + show(emp));
  }
}

Outcome criterion1() {
  Outcome o;
  quotient_matches(o, "A:3:2", true);
  quotient_matches(o, "A:3:3", false);
  const auto emp = empirical_quotient(load("A:3:2").inst, load("A:3:2").types).entries;
  o.require(emp == rows({{0, 0, 0, 64}, {0, 0, 32, 32}, {0, 16, 16, 32}, {8, 8, 16, 32}}),
            "A:3:2 quotient " + show(emp));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* d : {"B:2:2:2:sp", "B:2:4:2:ell", "B:2:1:4:herm"}) quotient_matches(o, d, true);
  quotient_matches(o, "B:3:2:2:sp", false);
  return o;
}

void lifted_identity(Outcome& o, const std::string& text, std::int64_t lambda, std::size_t sample) {
  const auto& l = load(text);
  LiftedOptions lo;
  lo.sample = sample;
  lo.seed = kSeed;
  const auto rep = verify_flag_eigenvectors(l.inst, l.types, lo);
  o.require(sample != 0 || rep.exhaustive, text + " not exhaustive");
  o.require(sample == 0 || rep.flags_checked >= sample, text + " checked " + std::to_string(rep.flags_checked));
  for (const auto& f : rep.families) {
    const std::string tag = text + " j=" + std::to_string(f.j);
    o.require(f.lambda == lambda, tag + " lambda " + std::to_string(f.lambda));
    o.require(f.checks > 0 && f.failures == 0, tag + " " + std::to_string(f.failures) + " identity failures");
    if (f.nonzero == 0) o.note(tag + " holds vacuously (F_j vanishes on all checked pairs)");
  }
}

Outcome criterion3() {
  Outcome o;
  for (const char* text : {"A:3:2", "A:3:3", "B:2:2:2:sp", "B:2:4:2:ell", "B:2:1:4:herm", "B:3:2:2:sp"}) {
    const auto& l = load(text);
    const auto& d = l.inst.descriptor();
    const auto closed = closed_form_quotient(d).entries;
    const auto emp = empirical_quotient(l.inst, l.types).entries;
    for (int j = 1; j <= family_count(d); ++j) {
      const auto f = eigvec_family(d, j);
      const std::string tag = std::string(text) + " v_" + std::to_string(j);
      o.require(quotient_eigenvalue(closed, f.coeffs) == f.eigenvalue, tag + " on the closed quotient");
      o.require(quotient_eigenvalue(emp, f.coeffs) == f.eigenvalue, tag + " on the empirical quotient");
    }
  }
  lifted_identity(o, "A:3:2", -16, 0);
  lifted_identity(o, "B:2:2:2:sp", -4, 0);
  lifted_identity(o, "B:2:4:2:ell", -8, 0);
  lifted_identity(o, "B:2:1:4:herm", -8, 0);
  lifted_identity(o, "D:4:2", -512, kSample);
  return o;
}

void nullity_matches(Outcome& o, const std::string& text, std::size_t expected) {
  MultiplicityOptions mo;
  mo.empirical = true;
  const auto rep = multiplicity(load(text).inst, mo);
  o.require(rep.closed == expected, text + " closed " + rep.closed.str());
  o.require(rep.empirical && *rep.empirical == expected,
            text + " empirical " + (rep.empirical ? std::to_string(*rep.empirical) : "missing"));
  o.require(rep.empirical_rank && rep.empirical_rank->agree() && rep.empirical_rank->primes.size() == 2,
            text + " two-prime certification");
}

Outcome criterion4() {
  Outcome o;
  nullity_matches(o, "A:3:2", 28);
  nullity_matches(o, "B:2:4:2:ell", 40);
  nullity_matches(o, "B:2:1:4:herm", 40);
  nullity_matches(o, "B:3:2:2:sp", 120);
  const auto rep = multiplicity(load("B:3:2:2:sp").inst, {});
  o.require(rep.modules.size() == 2, "B:3:2:2:sp expects two modules at lambda_min");
  std::multiset<std::string> parts;
  for (const auto& m : rep.modules) parts.insert(BigInt(m.within * m.generic_degree).str());
  o.require(parts == std::multiset<std::string>{"105", "15"}, "B:3:2:2:sp per-module multiplicities");
  return o;
}

Outcome criterion5() {
  Outcome o;
  MultiplicityOptions mo;
  mo.empirical = true;
  const auto rep = multiplicity(load("B:2:2:2:sp").inst, mo);
  o.require(rep.closed == 18, "theorem value " + rep.closed.str());
  o.require(rep.table && rep.table->value == 36, "table value");
  o.require(rep.empirical.has_value(), "empirical nullity missing");
  if (rep.empirical) o.note("theorem 18, table 36, empirical " + std::to_string(*rep.empirical) + ", matching " + rep.matching);
  const std::string want = !rep.empirical ? "" : *rep.empirical == 18 ? "closed" : *rep.empirical == 36 ? "table" : "neither";
  o.require(rep.matching == want, "matching flag '" + rep.matching + "'");
  return o;
}

void span_matches(Outcome& o, const std::string& text, std::size_t expected) {
  const auto& l = load(text);
  const auto rep = spanning_rank(l.inst, l.types);
  std::string ranks;
  for (std::size_t i = 0; i < rep.rank.primes.size(); ++i) ranks += (i ? "," : "") + std::to_string(rep.rank.ranks[i]);
  o.require(rep.expected == expected, text + " expected " + rep.expected.str());
  o.require(rep.rank.agree() && rep.rank.value == expected,
            text + " rank " + std::to_string(rep.rank.value) + " (per prime " + ranks + "), want " +
                std::to_string(expected));
  if (rep.exact_rank) o.require(*rep.exact_rank == rep.rank.value, text + " exact rank differs");
  if (l.inst.descriptor().kind == Kind::kA) {
    o.require(rep.drop_one_rank && rep.drop_one_cols && rep.drop_one_rank->value == expected &&
                  *rep.drop_one_cols == expected,
              text + " all-but-one-column basis");
  }
}

Outcome criterion6() {
  Outcome o;
  span_matches(o, "A:3:2", 28);
  span_matches(o, "B:2:2:2:sp", 18);
  span_matches(o, "B:2:4:2:ell", 40);
  span_matches(o, "D:4:2", 200);
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const char* text : {"A:3:2", "B:2:2:2:sp"}) {
    const auto& l = load(text);
    const auto scheme = point_scheme(l.inst.geometry());
    const auto rep = triangular_check(l.inst, l.types, scheme);
    for (const auto& c : rep.coefficients) o.require(c.ok, std::string(text) + " coefficient sums j=" + std::to_string(c.j));
    for (const auto& d : rep.direct) o.require(d.ok, std::string(text) + " direct identity j=" + std::to_string(d.j));
    o.require(!rep.coefficients.empty() && rep.direct.size() == rep.coefficients.size(), std::string(text) + " families");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* text : {"A:3:2", "B:2:2:2:sp"}) {
    const auto& l = load(text);
    const auto rep = compare_chi(l.inst, l.types);
    const std::size_t all = l.inst.num_flags() * l.inst.geometry().num_points() *
                            static_cast<std::size_t>(family_count(l.inst.descriptor()));
    o.require(rep.ok() && rep.checks == all, std::string(text) + " " + std::to_string(rep.mismatches) +
                                                 " mismatches in " + std::to_string(rep.checks) + " checks");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto d3 = Instance::load(Descriptor::oriflamme_unchecked(3, 2));
  const auto r3 = verify_structure(d3);
  o.require(r3.exhaustive && r3.ok(), "D_3(2) bipartite double");
  o.require(!r3.spectrum.empty(), "D_3(2) spectrum comparison missing");
  StructureOptions so;
  so.sample = kSample;
  so.seed = kSeed;
  const auto r4 = verify_structure(load("D:4:2").inst, so);
  o.require(r4.ok() && r4.edges > 0, "D:4:2 two copies (" + std::to_string(r4.class_violations) + " class, " +
                                         std::to_string(r4.partner_violations) + " partner violations)");
  o.note("D:4:2 sampled " + std::to_string(r4.edges) + " host edges");
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const char* text : {"A:3:2", "A:3:3", "B:2:2:2:sp", "B:2:4:2:ell", "B:2:1:4:herm", "B:3:2:2:sp",
                           "B:2:0:2:hyp", "B:2:3:4:herm"}) {
    const auto& l = load(text);
    const std::string tag = text;
    std::optional<IntMatrix> emp;
    try {
      emp = empirical_quotient(l.inst, l.types).entries;
    } catch (const Error& e) {
      o.require(false, tag + " representative independence: " + e.what());
      continue;
    }
    const auto valency = counts::valency(l.inst.descriptor());
    for (const auto s : row_sums(*emp)) o.require(s == valency, tag + " row sum " + std::to_string(s));
    const auto sizes = l.types.class_sizes(0);
    o.require(double_counting_holds(*emp, std::vector<std::int64_t>(sizes.begin(), sizes.end())),
              tag + " double counting");
    bool partition = true;
    for (std::uint32_t x = 0; x < l.types.num_points(); ++x) {
      std::size_t total = 0;
      for (auto s : l.types.class_sizes(x)) total += s;
      partition = partition && total == l.types.num_flags();
    }
    o.require(partition, tag + " partition");
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for oppflags"};
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "quotient matrices, type A (A:3:2, A:3:3)", 10, criterion1},
      {2, "quotient matrices, type B (W(3,2), Q-(5,2), H(3,4), W(5,2))", 60, criterion2},
      {3, "eigenvector identities, quotient and lifted", 300, criterion3},
      {4, "multiplicity of lambda_min by two-prime nullity", 900, criterion4},
      {5, "W(3,2) theorem vs table arbitration", 60, criterion5},
      {6, "spanning ranks of the F-column concatenations", 1200, criterion6},
      {7, "triangular criterion, direct and coefficient level", 60, criterion7},
      {8, "chi_j equals F_j exhaustively", 60, criterion8},
      {9, "oriflamme structure lemma (D_3, D_4 at q=2)", 120, criterion9},
      {10, "property suites on all quotient instances", 120, criterion10},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.limit_seconds, "time limit");
    const bool pass = o.passed();
    all = all && pass;
    std::printf("criterion %2d %s  %-60s %8.2f s (limit %.0f s)  %s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs,
                c.limit_seconds, o.summary().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
