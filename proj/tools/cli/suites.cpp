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


#include "cli/suites.hpp"

#include <algorithm>

#include <oppflags/counts.hpp>
#include <oppflags/error.hpp>
#include <oppflags/families.hpp>
#include <oppflags/intersection.hpp>
#include <oppflags/lifted.hpp>
#include <oppflags/multiplicity.hpp>
#include <oppflags/point_scheme.hpp>
#include <oppflags/quotient.hpp>
#include <oppflags/spanning.hpp>
#include <oppflags/structure.hpp>
#include <oppflags/triangular.hpp>

namespace oppflags::cli {

namespace {

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json rational(const Rational& v) {
  if (denominator(v) == 1) return big(numerator(v));
  return v.str();
}

Json matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<std::int64_t>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

Json matrix(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& x : m.row(i)) row.push_back(rational(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational(x));
  return out;
}

Json ranks(const ModularRank& r) {
  Json out = Json::object();
  for (std::size_t i = 0; i < r.primes.size(); ++i) out[std::to_string(r.primes[i])] = r.ranks[i];
  return out;
}

std::string kind_label(const Descriptor& d) {
  switch (d.kind) {
    case Kind::kA: return "type A";
    case Kind::kB: return "type B";
    case Kind::kD: return "type D";
  }
  return "";
}

void require_typed(const Context& ctx, const char* suite) {
  if (ctx.instance().is_oriflamme()) {
    throw Error(ErrorCode::kUnsupported, std::string(suite) + " needs point types; oriflamme flags have none");
  }
}

// Every j-indexed suite needs the families; this throws kEvenRankTypeA early.
int families(const Context& ctx) { return family_count(ctx.descriptor()); }

std::string jname(const std::string& base, int j) { return base + "_j" + std::to_string(j); }

// One identity check and one non-vanishing check per family.
void add_lifted(Report& r, const LiftedReport& rep, const std::string& prefix, const std::string& anchor,
                const std::string& provenance) {
  const std::string scope = std::string(rep.exhaustive ? "exhaustive" : "sampled") + " over " +
                            std::to_string(rep.flags_checked) + " flags and " + std::to_string(rep.points) + " points";
  for (const auto& fr : rep.families) {
    Check c;
    c.name = jname(prefix + "lifted", fr.j);
    c.expected = {{"failures", 0}};
    c.actual = {{"failures", fr.failures}, {"checks", fr.checks}};
    c.status = fr.failures == 0 && fr.checks > 0 ? Status::kPass : Status::kFail;
    c.provenance = provenance;
    c.anchor = anchor;
    c.detail = scope + ", lambda " + std::to_string(fr.lambda);
    if (fr.first_failure) {
      c.detail += "; first failure at flag " + std::to_string(fr.first_failure->first) + ", point " +
                  std::to_string(fr.first_failure->second);
    }
    r.add(std::move(c));
    Check nz;
    nz.name = jname(prefix + "nonzero", fr.j);
    nz.expected = "> 0";
    nz.actual = fr.nonzero;
    nz.status = fr.nonzero > 0 ? Status::kPass : Status::kFail;
    nz.provenance = provenance;
    nz.anchor = anchor;
    nz.detail = "evaluations with F_j(c, X) != 0, " + scope;
    r.add(std::move(nz));
  }
}

}  // namespace

const TypeTable& Context::types() {
  if (!types_) types_ = TypeTable::build(inst_.complex());
  return *types_;
}

std::size_t Context::effective_sample() const {
  if (options_.sample != 0) return std::min(options_.sample, inst_.num_flags());
  return inst_.num_flags() <= kAutoExhaustive ? inst_.num_flags() : kAutoSample;
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"enumerate", run_enumerate}, {"quotient", run_quotient},     {"eigvec", run_eigvec},
      {"chi", run_chi},             {"triangular", run_triangular}, {"scheme", run_scheme},
      {"spanning", run_spanning},   {"multiplicity", run_multiplicity}, {"structure", run_structure},
  };
  return table;
}

bool applicable(const std::string& suite, const Descriptor& d) {
  const bool typed = d.kind != Kind::kD;
  const bool families = !(d.kind == Kind::kA && d.n % 2 == 0);
  if (suite == "quotient" || suite == "scheme") return typed;
  if (suite == "chi" || suite == "triangular") return typed && families;
  if (suite == "eigvec" || suite == "spanning") return families;
  if (suite == "structure") return !typed;
  return true;
}

void run_enumerate(Context& ctx, Report& r) {
  const Descriptor& d = ctx.descriptor();
  const Instance& inst = ctx.instance();
  const std::string anchor = "counts of points and maximal flags, " + kind_label(d);
  r.expect("points", big(counts::num_points(d)), inst.geometry().num_points(), "paper", anchor);
  r.expect("flags", big(counts::num_flags(d)), inst.num_flags(), "paper", anchor);

  Json degrees = Json::array();
  std::vector<std::uint32_t> nb;
  std::size_t distinct = 0;
  std::size_t first = 0;
  for (const auto f : representative_points(inst.num_flags())) {
    nb.clear();
    inst.opposite_flags(f, nb);
    if (degrees.empty()) first = nb.size();
    if (nb.size() != first) ++distinct;
    degrees.push_back(nb.size());
  }
  r.expect("valency", big(counts::valency(d)), distinct == 0 ? Json(first) : degrees, "paper",
           "opposition graph valency, " + kind_label(d));

  if (inst.is_oriflamme()) {
    const auto& host = inst.complex();
    std::size_t plus = 0;
    const int n = host.length();
    for (std::uint32_t g = 0; g < host.num_subspaces(n); ++g) plus += host.generator_class(g) > 0 ? 1 : 0;
    r.expect("generator_classes", Json::array({host.num_subspaces(n) - plus, host.num_subspaces(n) - plus}),
             Json::array({plus, host.num_subspaces(n) - plus}), "trivial", "two generator classes of equal size");
    return;
  }
  const TypeTable& types = ctx.types();
  Json closed = Json::array();
  for (int i = 1; i <= types.num_types(); ++i) closed.push_back(big(counts::class_size(d, i)));
  Json sizes = Json::array();
  Json sums = Json::array();
  for (const auto x : representative_points(types.num_points())) {
    const auto s = types.class_sizes(x);
    sizes.push_back(s);
    std::size_t total = 0;
    for (const auto v : s) total += v;
    sums.push_back(total);
  }
  Json uniform = std::all_of(sizes.begin(), sizes.end(), [&](const Json& s) { return s == sizes.front(); })
                     ? sizes.front()
                     : sizes;
  r.expect("class_sizes", closed, uniform, "paper", "sizes of the type classes C_i^X, " + kind_label(d));
  r.expect("partition", Json::array({inst.num_flags(), inst.num_flags(), inst.num_flags()}), sums, "trivial",
           "type classes partition the flags");
  if (inst.geometry().is_polar()) {
    const auto x = representative_points(types.num_points()).front();
    std::size_t opposite = 0;
    for (std::uint32_t y = 0; y < types.num_points(); ++y) {
      opposite += inst.geometry().relation(x, y) == PointRelation::kOpposite ? 1 : 0;
    }
    r.expect("opposite_points", big(counts::alpha(d.n, d.e(), QPower(d.q))), opposite, "paper",
             "points opposite a fixed point of a polar space");
  }
}

void run_quotient(Context& ctx, Report& r) {
  require_typed(ctx, "quotient");
  const Descriptor& d = ctx.descriptor();
  const auto closed = closed_form_quotient(d);
  r.data["quotient_closed"] = matrix(closed.entries);
  const std::string anchor = "quotient matrix closed form, " + kind_label(d);
  QuotientMatrix emp;
  try {
    emp = empirical_quotient(ctx.instance(), ctx.types());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRepresentativeDisagreement) throw;
    Check c{"representative_independence", Status::kFail, true, false, "derived", "transitivity on type classes",
            e.what()};
    r.add(std::move(c));
    return;
  }
  r.data["quotient_empirical"] = matrix(emp.entries);
  r.expect("representative_independence", true, true, "derived", "transitivity on type classes");
  r.expect("empirical_vs_closed", matrix(closed.entries), matrix(emp.entries), "paper", anchor);
  if (const auto ex = worked_example_quotient(d)) {
    r.expect("worked_example", matrix(*ex), matrix(emp.entries), "paper", "worked quotient matrix, " + kind_label(d));
  }
  const auto val = to_int64(counts::valency(d), "valency");
  r.expect("row_sums", std::vector<std::int64_t>(emp.entries.rows(), val), row_sums(emp.entries), "paper",
           "opposition graph valency, " + kind_label(d));
  std::vector<std::int64_t> sizes;
  for (int i = 1; i <= d.num_types(); ++i) sizes.push_back(to_int64(counts::class_size(d, i), "class size"));
  r.expect("double_counting", true, double_counting_holds(emp.entries, sizes), "paper",
           "double counting |C_i^X| Q_ij = |C_j^X| Q_ji");
}

void run_eigvec(Context& ctx, Report& r) {
  const Descriptor& d = ctx.descriptor();
  const int m = families(ctx);
  Json fams = Json::array();
  std::optional<QuotientMatrix> closed;
  std::optional<QuotientMatrix> emp;
  if (!ctx.instance().is_oriflamme()) {
    closed = closed_form_quotient(d);
    emp = empirical_quotient(ctx.instance(), ctx.types());
  }
  const std::string qanchor = "eigenvectors v_j of the quotient matrix, " + kind_label(d);
  for (int j = 1; j <= m; ++j) {
    const auto f = eigvec_family(d, j);
    fams.push_back({{"j", j}, {"coeffs", f.coeffs}, {"eigenvalue", f.eigenvalue}});
    if (!closed) continue;
    const auto lc = quotient_eigenvalue(closed->entries, f.coeffs);
    const auto le = quotient_eigenvalue(emp->entries, f.coeffs);
    r.expect(jname("closed_quotient", j), f.eigenvalue, lc ? Json(*lc) : Json(), "paper", qanchor);
    r.expect(jname("empirical_quotient", j), f.eigenvalue, le ? Json(*le) : Json(), "paper", qanchor);
  }
  r.data["families"] = std::move(fams);

  LiftedOptions lo;
  lo.sample = ctx.effective_sample();
  lo.seed = ctx.options().seed;
  lo.jobs = ctx.options().jobs;
  add_lifted(r, verify_flag_eigenvectors(ctx.instance(), ctx.types(), lo), "",
             "lifted eigenvectors F_j of the opposition graph, " + kind_label(d), "paper");
  if (ctx.instance().is_oriflamme()) {
    lo.component = true;
    add_lifted(r, verify_flag_eigenvectors(ctx.instance(), ctx.types(), lo), "component_",
               "F_j(c^+, X) through the two-copies isomorphism", "derived");
  }
}

void run_chi(Context& ctx, Report& r) {
  require_typed(ctx, "chi");
  families(ctx);
  const auto rep = compare_chi(ctx.instance(), ctx.types());
  Check c;
  c.name = "chi_equals_F";
  c.expected = {{"mismatches", 0}};
  c.actual = {{"mismatches", rep.mismatches}, {"checks", rep.checks}};
  c.status = rep.ok() ? Status::kPass : Status::kFail;
  c.provenance = "derived";
  c.anchor = "spanning functions chi_j restating the columns of F_j";
  if (rep.first_mismatch) c.detail = *rep.first_mismatch;
  r.add(std::move(c));
}

void run_triangular(Context& ctx, Report& r) {
  require_typed(ctx, "triangular");
  families(ctx);
  const auto scheme = point_scheme(ctx.instance().geometry());
  const auto rep = triangular_check(ctx.instance(), ctx.types(), scheme);
  const std::string anchor = "triangular criterion with g(j), " + kind_label(ctx.descriptor());
  Json g = Json::array();
  for (std::size_t k = 0; k < rep.coefficients.size(); ++k) {
    const auto& co = rep.coefficients[k];
    const auto& di = rep.direct[k];
    g.push_back(co.g);
    Json zeros = Json::array();
    Json below = Json::array();
    for (const auto& row : co.below) {
      zeros.push_back(std::vector<int>(row.size(), 0));
      below.push_back(rationals(row));
    }
    r.expect(jname("coefficients_below_g", co.j), zeros, below, "paper", "coefficient sums vanish for h < g(j)");
    r.expect(jname("coefficients_at_g", co.j), rationals(co.stated_at_g), rationals(co.at_g), "paper", anchor);
    std::vector<Rational> spectrum(co.spectrum.size(), Rational(0));
    spectrum[1] = co.stated;
    r.expect(jname("coefficient_spectrum", co.j), rationals(spectrum), rationals(co.spectrum), "paper", anchor);
    r.expect(jname("direct_below_g", co.j), true, di.below_zero, "paper", "T_h^T F_j = 0 for h < g(j)");
    Json vals = Json::array();
    for (const auto& v : di.relation_values) vals.push_back(v ? Json(*v) : Json());
    Check c;
    c.name = jname("direct_at_g", co.j);
    c.expected = {{"alpha", rational(co.spectrum[1])}};
    c.actual = {{"alpha", di.proportional ? rational(di.alpha) : Json()}, {"relation_values", vals}};
    c.status = di.ok ? Status::kPass : Status::kFail;
    c.provenance = "derived";
    c.anchor = "T_g^T F_j = alpha E_1, assembled over all flags";
    r.add(std::move(c));
  }
  r.data["g"] = std::move(g);
}

void run_scheme(Context& ctx, Report& r) {
  require_typed(ctx, "scheme");
  const Descriptor& d = ctx.descriptor();
  const Geometry& geo = ctx.instance().geometry();
  const auto s = point_scheme(geo);
  r.data["p_matrix"] = matrix(s.p_matrix);
  r.data["idempotent_ranks"] = s.idempotent_ranks;
  const std::string anchor = "P-matrix of the point scheme, " + kind_label(d);
  r.expect("relations_partition", true, s.partition_ok, "trivial", "relation matrices sum to J with A_0 = I");
  r.expect("idempotent_eigenvalues", true, s.eigen_ok, "paper", anchor);
  r.expect("rank_E0", 1, s.idempotent_ranks.front(), "trivial", "E_0 = J/|points|");
  std::size_t total = 0;
  for (const auto x : s.idempotent_ranks) total += x;
  r.expect("idempotent_ranks_sum", geo.num_points(), total, "trivial", "idempotents resolve the identity");
  r.expect("rank_E1", big(s.reflection_degree), s.idempotent_ranks.at(1), "paper",
           "generic degree of the reflection module");

  const auto closed = closed_form_intersections(d);
  const auto emp = empirical_intersections(geo, ctx.types());
  r.expect("intersection_numbers", Json::array(), intersection_mismatches(closed, emp), "paper",
           "intersection numbers t^k_ij, " + kind_label(d));
  std::size_t known = 0;
  for (int i = 1; i <= closed.types(); ++i) {
    for (int j = 1; j <= closed.types(); ++j) {
      for (int k = 0; k < closed.relations(); ++k) known += closed.at(i, j, k) ? 1 : 0;
    }
  }
  r.data["intersection_closed_entries"] = known;
  bool sums_ok = true;
  for (int k = 0; k < emp.relations(); ++k) {
    for (int i = 1; i <= emp.types(); ++i) {
      std::int64_t s_ij = 0;
      for (int j = 1; j <= emp.types(); ++j) s_ij += emp.at(i, j, k).value_or(0);
      if (s_ij != to_int64(counts::class_size(d, i), "class size")) sums_ok = false;
    }
  }
  r.expect("intersection_row_sums", true, sums_ok, "trivial", "sum over j of t^k_ij equals |C_i^X|");
  Json t = Json::array();
  for (int k = 0; k < emp.relations(); ++k) {
    Json mk = Json::array();
    for (int i = 1; i <= emp.types(); ++i) {
      std::vector<std::int64_t> row;
      for (int j = 1; j <= emp.types(); ++j) row.push_back(emp.at(i, j, k).value_or(-1));
      mk.push_back(row);
    }
    t.push_back({{"relation", relation_name(d, k)}, {"t", mk}});
  }
  r.data["intersection_numbers"] = std::move(t);
}

namespace {

void add_component_rank(Context& ctx, Report& r) {
  SpanningOptions so;
  so.component = true;
  const auto rep = spanning_rank(ctx.instance(), ctx.types(), so);
  Check c;
  c.name = "component_spanning_rank";
  c.expected = big(rep.expected);
  c.actual = rep.rank.value;
  c.status = BigInt(rep.rank.value) == rep.expected && rep.rank.agree() ? Status::kPass : Status::kFail;
  c.provenance = "derived";
  c.anchor = "columns F_j(c^+, X) through the two-copies isomorphism";
  c.detail = "ranks " + ranks(rep.rank).dump();
  r.add(std::move(c));
}

}  // namespace

void run_spanning(Context& ctx, Report& r) {
  families(ctx);
  const auto rep = spanning_rank(ctx.instance(), ctx.types());
  const std::string anchor = "columns of F_1..F_m span the eigenspace, " + kind_label(ctx.descriptor());
  Check c;
  c.name = "spanning_rank";
  c.expected = big(rep.expected);
  c.actual = rep.rank.value;
  c.status = BigInt(rep.rank.value) == rep.expected && rep.rank.agree() ? Status::kPass : Status::kFail;
  c.provenance = "derived";
  c.anchor = anchor;
  c.detail = "rows " + std::to_string(rep.rows) + ", cols " + std::to_string(rep.cols) + ", ranks " +
             ranks(rep.rank).dump();
  r.add(std::move(c));
  if (rep.exact_rank) {
    r.expect("exact_rank", rep.rank.value, *rep.exact_rank, "derived", "fraction-free rank agrees with modular rank");
  }
  if (rep.drop_one_rank) {
    r.expect("drop_one_rank", rep.rank.value, rep.drop_one_rank->value, "paper",
             "basis from all but one column of each F_j");
    r.expect("drop_one_basis", *rep.drop_one_cols, rep.drop_one_rank->value, "paper",
             "basis from all but one column of each F_j");
  }
  if (ctx.instance().is_oriflamme()) add_component_rank(ctx, r);
}

void run_multiplicity(Context& ctx, Report& r) {
  const Descriptor& d = ctx.descriptor();
  MultiplicityOptions mo;
  mo.empirical = ctx.options().empirical;
  MultiplicityReport rep;
  std::string budget_note;
  try {
    rep = multiplicity(ctx.instance(), mo);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    budget_note = e.what();
    mo.empirical = false;
    rep = multiplicity(ctx.instance(), mo);
  }
  Json modules = Json::array();
  for (const auto& m : rep.modules) {
    const auto v = m.eigenvalue.value(QPower(d.q));
    modules.push_back({{"label", m.label},
                       {"eigenvalue", m.eigenvalue.to_string()},
                       {"value", v ? big(*v) : Json()},
                       {"within", m.within},
                       {"generic_degree", big(m.generic_degree)}});
  }
  Json attaining = Json::array();
  for (const auto& m : rep.lambda_min.modules) attaining.push_back(m.label);
  r.data["lambda_min"] = {{"power", rep.lambda_min.value.to_string()},
                          {"value", rep.lambda_value ? big(*rep.lambda_value) : Json()},
                          {"modules", attaining}};
  r.data["modules"] = std::move(modules);
  r.data["theorem"] = big(rep.closed);
  r.data["table"] = rep.table ? Json{{"row", rep.table->name}, {"value", big(rep.table->value)}} : Json();
  r.data["empirical"] = rep.empirical ? Json(*rep.empirical) : Json();
  r.data["matching"] = rep.matching;

  const std::string theorem_anchor = "multiplicity theorem, modules attaining lambda_min";
  const std::string table_anchor =
      rep.table ? "appendix multiplicity table row " + rep.table->name : "no appendix table row";
  if (!rep.empirical) {
    const std::string why = budget_note.empty() ? "empirical nullity not requested" : budget_note;
    r.skip("theorem_vs_empirical", why, "paper", theorem_anchor);
    r.skip("table_vs_empirical", rep.table ? why : "derived, not tabulated", "paper", table_anchor);
    return;
  }
  const std::string detail = "nullity ranks " + ranks(*rep.empirical_rank).dump();
  r.expect("theorem_vs_empirical", big(rep.closed), *rep.empirical, "paper", theorem_anchor);
  r.checks.back().detail = detail;
  if (rep.table) {
    r.expect("table_vs_empirical", big(rep.table->value), *rep.empirical, "paper", table_anchor);
    r.checks.back().detail = detail;
  } else {
    r.skip("table_vs_empirical", "derived, not tabulated", "paper", table_anchor);
  }
}

void run_structure(Context& ctx, Report& r) {
  if (!ctx.instance().is_oriflamme()) {
    throw Error(ErrorCode::kUnsupported, "structure compares an oriflamme with its hyperbolic host");
  }
  StructureOptions so;
  so.sample = ctx.effective_sample();
  so.seed = ctx.options().seed;
  const auto rep = verify_structure(ctx.instance(), so);
  const bool even = rep.n % 2 == 0;
  const std::string anchor = even ? "host opposition graph is two copies of the oriflamme graph"
                                  : "host opposition graph is the bipartite double of the oriflamme graph";
  Check c;
  c.name = "edge_structure";
  c.expected = {{"class_violations", 0}, {"partner_violations", 0}, {"degree_mismatches", 0}};
  c.actual = {{"class_violations", rep.class_violations},
              {"partner_violations", rep.partner_violations},
              {"degree_mismatches", rep.degree_mismatches},
              {"edges", rep.edges}};
  c.status = rep.edges > 0 && rep.class_violations == 0 && rep.partner_violations == 0 && rep.degree_mismatches == 0
                 ? Status::kPass
                 : Status::kFail;
  c.provenance = "paper";
  c.anchor = anchor;
  c.detail = std::string(rep.exhaustive ? "exhaustive" : "sampled") + " over " + std::to_string(rep.host_flags) +
             " host flags";
  r.add(std::move(c));
  if (rep.spectrum.empty()) {
    r.skip("spectrum_relation", rep.exhaustive ? "host graph exceeds the nullity budget" : "sampled run", "paper",
           anchor);
    return;
  }
  for (const auto& row : rep.spectrum) {
    Check s;
    s.name = "spectrum_relation_" + std::to_string(row.lambda);
    s.expected = even ? Json(2 * row.plus) : Json(row.plus + row.minus);
    s.actual = row.host;
    s.status = row.ok ? Status::kPass : Status::kFail;
    s.provenance = "paper";
    s.anchor = anchor;
    s.detail = "oriflamme nullities " + std::to_string(row.plus) + " at lambda, " + std::to_string(row.minus) +
               " at -lambda";
    r.add(std::move(s));
  }
}

}  // namespace oppflags::cli
