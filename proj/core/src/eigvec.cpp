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

#include "oppflags/families.hpp"

#include <algorithm>

#include "oppflags/error.hpp"

namespace oppflags {

namespace {

BigInt eval_int(const Rational& r, const char* what) { return to_integer(r, what); }

std::string bracket(int k) { return "[" + std::to_string(k) + "]"; }

}  // namespace

std::optional<BigInt> SignedPower::value(const QPower& q) const {
  if (!exponent.is_integer() && q.root() == 0) return std::nullopt;
  const BigInt magnitude = to_integer(q.pow(exponent), "power");
  return sign < 0 ? BigInt(-magnitude) : magnitude;
}

std::string SignedPower::to_string() const {
  const std::string e = exponent.is_integer() ? exponent.to_string() : "(" + exponent.to_string() + ")";
  return std::string(sign < 0 ? "-" : "") + "q^" + e;
}

bool less_than(const SignedPower& a, const SignedPower& b) {
  if (a.sign != b.sign) return a.sign < b.sign;
  return a.sign < 0 ? a.exponent > b.exponent : a.exponent < b.exponent;
}

std::vector<ModuleInfo> module_table(const Descriptor& d) {
  const QPower q(d.q);
  const int n = d.n;
  const int qi = static_cast<int>(d.q);
  std::vector<ModuleInfo> out;
  switch (d.kind) {
    case Kind::kA: {
      ModuleInfo m;
      m.label = "[" + std::to_string(n) + ",1]";
      m.eigenvalue = {-1, HalfInt::halves(n * n - 1)};
      m.within = (n + 1) / 2;
      m.generic_degree = eval_int((q.pow(n + 1) - qi) / (qi - 1), "generic degree");
      out.push_back(m);
      return out;
    }
    case Kind::kD: {
      ModuleInfo m;
      m.label = "(" + bracket(n - 1) + ",[1])";
      m.eigenvalue = {-1, HalfInt::whole((n - 1) * (n - 1))};
      m.within = n;
      m.generic_degree =
          eval_int((q.pow(n + 1) - qi) * (q.pow(n - 2) + 1) / ((qi - 1) * (qi + 1)), "generic degree");
      out.push_back(m);
      return out;
    }
    case Kind::kB: break;
  }
  const HalfInt e = d.e();
  ModuleInfo refl;
  refl.label = "(" + bracket(n - 1) + ",[1])";
  refl.eigenvalue = {-1, HalfInt::whole((n - 1) * (n - 1)) + e * (n - 1)};
  refl.within = n;
  refl.generic_degree = eval_int(q.pow(e) * (q.pow(n) - 1) * (q.pow(e + (n - 2)) + 1) /
                                     ((qi - 1) * (q.pow(e - 1) + 1)),
                                 "generic degree");
  out.push_back(refl);

  ModuleInfo top;
  top.label = "(∅," + bracket(n) + ")";
  top.eigenvalue = {n % 2 == 0 ? 1 : -1, HalfInt::whole(n * (n - 1))};
  top.within = 1;
  Rational deg = q.pow(e);
  for (int k = 1; k <= n - 1; ++k) deg *= (q.pow(e + (n - k)) + 1) / (q.pow(-e + (n - k)) + 1);
  top.generic_degree = eval_int(deg, "generic degree");
  out.push_back(top);

  if (d.two_e == 0 && n % 2 == 0 && n >= 4) {
    // The opposition graph splits into two isomorphic halves; the twin of the
    // reflection module carries the same eigenvalue and degree.
    ModuleInfo twin = refl;
    twin.label = "([1]," + bracket(n - 1) + ")";
    out.push_back(twin);
  }
  return out;
}

LambdaMin lambda_min(const Descriptor& d) {
  LambdaMin lm;
  const auto modules = module_table(d);
  lm.value = modules.front().eigenvalue;
  for (const auto& m : modules) {
    if (less_than(m.eigenvalue, lm.value)) lm.value = m.eigenvalue;
  }
  for (const auto& m : modules) {
    if (m.eigenvalue == lm.value) lm.modules.push_back(m);
  }
  lm.even_rank_type_a = d.kind == Kind::kA && d.n % 2 == 0;
  return lm;
}

BigInt closed_multiplicity(const LambdaMin& lm) {
  BigInt total = 0;
  for (const auto& m : lm.modules) total += m.within * m.generic_degree;
  return total;
}

std::optional<TableRow> tabulated_multiplicity(const Descriptor& d) {
  const int N = d.n;
  const bool even = N % 2 == 0;
  const int n = even ? N / 2 : (N + 1) / 2;
  const std::string ns = ", n=" + std::to_string(n);
  if (d.kind == Kind::kA) {
    const QPower q(d.q);
    const int qi = static_cast<int>(d.q);
    if (even) return TableRow{"A_{2n}(q)" + ns, eval_int(n * (q.pow(2 * n + 1) - qi) / (qi - 1), "table")};
    return TableRow{"A_{2n-1}(q)" + ns, eval_int(n * (q.pow(2 * n) - qi) / (qi - 1), "table")};
  }
  if (d.kind == Kind::kD) {
    if (!even) return std::nullopt;
    const QPower q(d.q);
    const int qi = static_cast<int>(d.q);
    return TableRow{"D_{2n}(q)" + ns,
                    eval_int(2 * n * (q.pow(2 * n + 1) - qi) * (q.pow(2 * n - 2) + 1) / (qi * qi - 1), "table")};
  }
  switch (d.form) {
    case FormKind::kSymplectic:
    case FormKind::kParabolic: {
      const QPower q(d.q);
      const int qi = static_cast<int>(d.q);
      if (even) {
        return TableRow{"B_{2n}(q)" + ns,
                        eval_int(2 * n * qi * (q.pow(2 * n) - 1) * (q.pow(2 * n - 1) + 1) / (qi - 1), "table")};
      }
      const Rational a = (2 * n - 1) * qi * (q.pow(2 * n - 1) - 1) * (q.pow(2 * n - 2) + 1) / (2 * (qi - 1));
      const Rational b = qi * (q.pow(2 * n - 1) + 1) * (q.pow(2 * n - 2) + 1) / (2 * (qi + 1));
      return TableRow{"B_{2n-1}(q)" + ns, eval_int(a + b, "table")};
    }
    case FormKind::kElliptic: {
      const QPower q(d.q);
      const int qi = static_cast<int>(d.q);
      return TableRow{"2D_{n+1}(q^2), n=" + std::to_string(N),
                      eval_int(N * q.pow(2) * (q.pow(2 * N) - 1) / (qi * qi - 1), "table")};
    }
    case FormKind::kHermitian: {
      const int r = static_cast<int>(QPower(d.q).root());
      const QPower q(static_cast<std::uint32_t>(r));
      if (d.two_e == 3) {
        return TableRow{"2A_{2n}(q^2), n=" + std::to_string(N),
                        eval_int(N * q.pow(3) * (q.pow(2 * N) - 1) * (q.pow(2 * N - 1) + 1) / ((r * r - 1) * (r + 1)),
                                 "table")};
      }
      if (even) {
        return TableRow{"2A_{4n-1}(q^2)" + ns,
                        eval_int(2 * n * q.pow(2) * (q.pow(4 * n) - 1) * (q.pow(4 * n - 3) + 1) /
                                     ((r * r - 1) * (r + 1)),
                                 "table")};
      }
      return TableRow{"2A_{4n-3}(q^2)" + ns, eval_int(r * (q.pow(4 * n - 3) + 1) / (r + 1), "table")};
    }
    default:
      return std::nullopt;
  }
}

int family_count(const Descriptor& d) {
  if (d.kind == Kind::kA) {
    if (d.n % 2 == 0) throw Error(ErrorCode::kEvenRankTypeA, "eigenvector families need odd rank in type A");
    return (d.n + 1) / 2;
  }
  return d.n;
}

std::int64_t module_eigenvalue(const Descriptor& d) {
  const QPower q(d.q);
  HalfInt x;
  switch (d.kind) {
    case Kind::kA:
      if (d.n % 2 == 0) throw Error(ErrorCode::kEvenRankTypeA, "eigenvector families need odd rank in type A");
      x = HalfInt::whole((d.n * d.n - 1) / 2);
      break;
    case Kind::kB: x = HalfInt::whole((d.n - 1) * (d.n - 1)) + d.e() * (d.n - 1); break;
    case Kind::kD: x = HalfInt::whole((d.n - 1) * (d.n - 1)); break;
  }
  return -to_int64(to_integer(q.pow(x), "module eigenvalue"), "module eigenvalue");
}

EigvecFamily eigvec_family(const Descriptor& d, int j) {
  const int m = family_count(d);
  if (j < 1 || j > m) {
    throw Error(ErrorCode::kOutOfRangeIndex, "family index " + std::to_string(j) + " outside [1," + std::to_string(m) + "]");
  }
  const QPower q(d.q);
  EigvecFamily f;
  f.j = j;
  f.eigenvalue = module_eigenvalue(d);
  std::int64_t top = 0;
  if (d.kind == Kind::kA) {
    top = to_int64(to_integer(q.pow(j), "coefficient"), "coefficient");
  } else {
    const HalfInt e = d.kind == Kind::kD ? HalfInt{} : d.e();
    top = to_int64(to_integer(q.pow(e + (j - 1)), "coefficient"), "coefficient");
  }
  f.coeffs.assign(static_cast<std::size_t>(m - j), 0);
  f.coeffs.insert(f.coeffs.end(), static_cast<std::size_t>(j), top);
  f.coeffs.insert(f.coeffs.end(), static_cast<std::size_t>(j), -1);
  f.coeffs.insert(f.coeffs.end(), static_cast<std::size_t>(m - j), 0);
  return f;
}

std::optional<std::int64_t> quotient_eigenvalue(const IntMatrix& q, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> qv(q.rows(), 0);
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t k = 0; k < q.cols(); ++k) qv[i] += q(i, k) * v[k];
  }
  const auto pivot = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  if (pivot == v.end()) return std::nullopt;
  const auto i = static_cast<std::size_t>(pivot - v.begin());
  if (qv[i] % v[i] != 0) return std::nullopt;
  const std::int64_t lambda = qv[i] / v[i];
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (qv[r] != lambda * v[r]) return std::nullopt;
  }
  return lambda;
}

std::int64_t eval_chi(const FlagComplex& fc, int j, std::uint32_t p, std::size_t flag) {
  const Descriptor& d = fc.geometry().descriptor();
  const int m = family_count(d);
  if (j < 1 || j > m) throw Error(ErrorCode::kOutOfRangeIndex, "family index out of range");
  const QPower q(d.q);
  // U_0 is empty and U_{n+1} is the whole space.
  auto in = [&](int k) { return k > fc.length() || (k >= 1 && fc.flag_member(flag, k).pts.test(p)); };
  if (d.kind == Kind::kA) {
    if (in(m - j)) return 0;
    if (in(m)) return to_int64(to_integer(q.pow(j), "chi"), "chi");
    if (in(m + j)) return -1;
    return 0;
  }
  const int n = d.n;
  const HalfInt e = d.kind == Kind::kD ? HalfInt{} : d.e();
  if (in(n - j)) return 0;
  if (in(n)) return to_int64(to_integer(q.pow(e + (j - 1)), "chi"), "chi");
  if (n - j == 0 || fc.flag_member(flag, n - j).perp.test(p)) return -1;
  return 0;
}

}  // namespace oppflags
