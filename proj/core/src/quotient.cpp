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

#include "oppflags/quotient.hpp"

#include <string>

#include "oppflags/error.hpp"

namespace oppflags {

QuotientMatrix closed_form_quotient(const Descriptor& d) {
  if (d.kind == Kind::kD) throw Error(ErrorCode::kUnsupported, "oriflamme flags carry no point types");
  const QPower q(d.q);
  const int n = d.n;
  const int ell = d.num_types();
  QuotientMatrix out;
  out.entries = IntMatrix(static_cast<std::size_t>(ell), static_cast<std::size_t>(ell), 0);
  for (int i = 1; i <= ell; ++i) {
    for (int j = 1; j <= ell; ++j) {
      Rational value = 0;
      if (d.kind == Kind::kA) {
        if (i + j >= n + 2) {
          const int delta = i + j == n + 2 ? 1 : 0;
          // (n^2 - n)/2 is an integer
          value = (static_cast<int>(d.q) - 1 + delta) * q.pow((n * n - n) / 2 + j - 2);
        }
      } else {
        const HalfInt e = d.e();
        const Rational base = q.pow(HalfInt::whole(n * (n - 3)) + e * n - e);
        const int delta = i + j == 2 * n + 1 ? 1 : 0;
        if (i + j >= 2 * n + 1) {
          if (j <= n) {
            value = (static_cast<int>(d.q) - 1 + delta) * base * q.pow(j);
          } else {
            value = (static_cast<int>(d.q) - 1 + delta) * base * q.pow(e + (j - 1));
            if (i == j) value += base * q.pow(n) * (q.pow(e) - q.q());
          }
        }
      }
      out.entries(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          to_int64(to_integer(value, "quotient entry"), "quotient entry");
    }
  }
  return out;
}

std::optional<IntMatrix> worked_example_quotient(const Descriptor& d) {
  const QPower q(d.q);
  std::vector<Rational> v;
  if (d.kind == Kind::kA && d.n == 3) {
    auto p = [&](int k) { return q.pow(k); };
    v = {0,    0,           0,           p(6),         //
         0,    0,           p(5),        p(6) - p(5),  //
         0,    p(4),        p(5) - p(4), p(6) - p(5),  //
         p(3), p(4) - p(3), p(5) - p(4), p(6) - p(5)};
  } else if (d.kind == Kind::kB && d.n == 2) {
    const HalfInt e = d.e();
    auto p = [&](HalfInt x) { return q.pow(x); };
    const HalfInt e2 = e * 2;
    v = {0,    0,                 0,                       p(e2 + 2),                                //
         0,    0,                 p(e2 + 1),               p(e2 + 2) - p(e2 + 1),                    //
         0,    p(e + 1),          p(e2 + 1) - p(e + 1),    p(e2 + 2) - p(e2 + 1),                    //
         p(e), p(e + 1) - p(e),   p(e2 + 1) - p(e2),       p(e2 + 2) - p(e2 + 1) + p(e2) - p(e + 1)};
  } else {
    return std::nullopt;
  }
  IntMatrix m(4, 4, 0);
  for (std::size_t k = 0; k < 16; ++k) {
    m(k / 4, k % 4) = to_int64(to_integer(v[k], "quotient entry"), "quotient entry");
  }
  return m;
}

QuotientMatrix empirical_quotient(const Instance& inst, const TypeTable& types, const QuotientOptions& options) {
  if (inst.is_oriflamme()) throw Error(ErrorCode::kUnsupported, "oriflamme flags carry no point types");
  const int ell = types.num_types();
  const auto base_points =
      options.base_points.empty() ? representative_points(types.num_points()) : options.base_points;
  QuotientMatrix out;
  out.provenance = Provenance::kEmpirical;
  out.entries = IntMatrix(static_cast<std::size_t>(ell), static_cast<std::size_t>(ell), 0);
  std::vector<bool> seen_row(static_cast<std::size_t>(ell), false);
  std::vector<std::uint32_t> nb;
  std::vector<std::int64_t> row(static_cast<std::size_t>(ell));
  for (const auto x : base_points) {
    for (int i = 1; i <= ell; ++i) {
      const auto members = types.class_members(x, i);
      if (members.empty()) {
        throw Error(ErrorCode::kRepresentativeDisagreement, "type " + std::to_string(i) + " is empty");
      }
      std::vector<std::uint32_t> reps;
      const std::size_t k = std::min(options.representatives, members.size());
      for (std::size_t r = 0; r < k; ++r) {
        reps.push_back(members[k == 1 ? 0 : r * (members.size() - 1) / (k - 1)]);
      }
      for (const auto c : reps) {
        nb.clear();
        inst.opposite_flags(c, nb);
        std::fill(row.begin(), row.end(), 0);
        for (const auto d : nb) ++row[static_cast<std::size_t>(types.type(d, x) - 1)];
        const auto ri = static_cast<std::size_t>(i - 1);
        if (!seen_row[ri]) {
          for (std::size_t j = 0; j < row.size(); ++j) out.entries(ri, j) = row[j];
          seen_row[ri] = true;
          continue;
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (out.entries(ri, j) != row[j]) {
            throw Error(ErrorCode::kRepresentativeDisagreement,
                        "row " + std::to_string(i) + " differs for flag " + std::to_string(c) + " and point " +
                            std::to_string(x));
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::int64_t> row_sums(const IntMatrix& q) {
  std::vector<std::int64_t> sums(q.rows(), 0);
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) sums[i] += q(i, j);
  }
  return sums;
}

bool double_counting_holds(const IntMatrix& q, const std::vector<std::int64_t>& sizes) {
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (sizes[i] * q(i, j) != sizes[j] * q(j, i)) return false;
    }
  }
  return true;
}

}  // namespace oppflags
