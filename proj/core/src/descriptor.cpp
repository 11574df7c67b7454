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

#include "oppflags/descriptor.hpp"

#include <charconv>
#include <vector>

#include "oppflags/error.hpp"
#include "oppflags/finite_field.hpp"

namespace oppflags {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int(std::string_view field, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw Error(ErrorCode::kInadmissibleParameters,
                "bad " + std::string(what) + " '" + std::string(field) + "'");
  }
  return value;
}

FormKind parse_form(std::string_view f) {
  if (f == "sp") return FormKind::kSymplectic;
  if (f == "par") return FormKind::kParabolic;
  if (f == "hyp") return FormKind::kHyperbolic;
  if (f == "ell") return FormKind::kElliptic;
  if (f == "herm") return FormKind::kHermitian;
  throw Error(ErrorCode::kInadmissibleParameters,
              "unknown form '" + std::string(f) + "' (expected sp, par, hyp, ell or herm)");
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

std::string_view form_name(FormKind f) {
  switch (f) {
    case FormKind::kNone: return "none";
    case FormKind::kSymplectic: return "sp";
    case FormKind::kParabolic: return "par";
    case FormKind::kHyperbolic: return "hyp";
    case FormKind::kElliptic: return "ell";
    case FormKind::kHermitian: return "herm";
  }
  return "?";
}

int Descriptor::ambient_dim() const {
  switch (kind) {
    case Kind::kA: return n + 1;
    case Kind::kD: return 2 * n;
    case Kind::kB: break;
  }
  switch (form) {
    case FormKind::kSymplectic:
    case FormKind::kHyperbolic: return 2 * n;
    case FormKind::kParabolic: return 2 * n + 1;
    case FormKind::kElliptic: return 2 * n + 2;
    case FormKind::kHermitian: return two_e == 1 ? 2 * n : 2 * n + 1;
    case FormKind::kNone: break;
  }
  return 0;
}

std::string Descriptor::to_string() const {
  switch (kind) {
    case Kind::kA: return "A:" + std::to_string(n) + ":" + std::to_string(q);
    case Kind::kD: return "D:" + std::to_string(n) + ":" + std::to_string(q);
    case Kind::kB: break;
  }
  return "B:" + std::to_string(n) + ":" + std::to_string(two_e) + ":" + std::to_string(q) + ":" +
         std::string(form_name(form));
}

std::string Descriptor::geometry_name() const {
  const std::string d = std::to_string(ambient_dim() - 1);
  const std::string qs = std::to_string(q);
  switch (kind) {
    case Kind::kA: return "PG(" + d + "," + qs + ")";
    case Kind::kD: return "D" + std::to_string(n) + "(" + qs + ") in Q+(" + d + "," + qs + ")";
    case Kind::kB: break;
  }
  switch (form) {
    case FormKind::kSymplectic: return "W(" + d + "," + qs + ")";
    case FormKind::kParabolic: return "Q(" + d + "," + qs + ")";
    case FormKind::kHyperbolic: return "Q+(" + d + "," + qs + ")";
    case FormKind::kElliptic: return "Q-(" + d + "," + qs + ")";
    case FormKind::kHermitian: return "H(" + d + "," + qs + ")";
    case FormKind::kNone: break;
  }
  return "?";
}

void validate(const Descriptor& d) {
  if (!is_prime_power(d.q)) {
    throw Error(ErrorCode::kInadmissibleParameters, "q = " + std::to_string(d.q) + " is not a prime power");
  }
  if (d.q > FiniteField::kMaxOrder) {
    throw Error(ErrorCode::kTooLarge, "q = " + std::to_string(d.q) + " exceeds the field cap");
  }
  switch (d.kind) {
    case Kind::kA:
      if (d.n < 1) throw Error(ErrorCode::kInadmissibleParameters, "type A needs n >= 1");
      return;
    case Kind::kD:
      if (d.n < 4) throw Error(ErrorCode::kInadmissibleParameters, "oriflamme geometry needs n >= 4");
      return;
    case Kind::kB: break;
  }
  if (d.n < 2) throw Error(ErrorCode::kInadmissibleParameters, "polar spaces need rank n >= 2");
  int expected = -1;
  switch (d.form) {
    case FormKind::kSymplectic:
    case FormKind::kParabolic: expected = 2; break;
    case FormKind::kHyperbolic: expected = 0; break;
    case FormKind::kElliptic: expected = 4; break;
    case FormKind::kHermitian: expected = d.two_e == 3 ? 3 : 1; break;
    case FormKind::kNone: break;
  }
  if (d.two_e != expected) {
    throw Error(ErrorCode::kInadmissibleParameters,
                "form " + std::string(form_name(d.form)) + " does not have 2e = " + std::to_string(d.two_e));
  }
  if (d.form == FormKind::kHermitian && QPower(d.q).root() == 0) {
    throw Error(ErrorCode::kNonSquareFieldForHalfIntegerE,
                "hermitian forms need a square q, got " + std::to_string(d.q));
  }
}

Descriptor Descriptor::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.empty() || parts[0].size() != 1) {
    throw Error(ErrorCode::kInadmissibleParameters, "descriptor must start with A, B or D");
  }
  Descriptor d;
  switch (parts[0][0]) {
    case 'A':
    case 'D':
      if (parts.size() != 3) {
        throw Error(ErrorCode::kInadmissibleParameters,
                    "expected " + std::string(parts[0]) + ":<n>:<q>, got '" + std::string(text) + "'");
      }
      d.kind = parts[0][0] == 'A' ? Kind::kA : Kind::kD;
      d.n = static_cast<int>(parse_int(parts[1], "rank"));
      d.q = static_cast<std::uint32_t>(parse_int(parts[2], "field order"));
      if (d.kind == Kind::kD) d.form = FormKind::kHyperbolic;
      break;
    case 'B':
      if (parts.size() != 5) {
        throw Error(ErrorCode::kInadmissibleParameters,
                    "expected B:<n>:<2e>:<q>:<form>, got '" + std::string(text) + "'");
      }
      d.kind = Kind::kB;
      d.n = static_cast<int>(parse_int(parts[1], "rank"));
      d.two_e = static_cast<int>(parse_int(parts[2], "2e"));
      d.q = static_cast<std::uint32_t>(parse_int(parts[3], "field order"));
      d.form = parse_form(parts[4]);
      if (d.two_e < 0 || d.two_e > 4) {
        throw Error(ErrorCode::kInadmissibleParameters, "2e must lie in 0..4");
      }
      break;
    default:
      throw Error(ErrorCode::kInadmissibleParameters, "descriptor must start with A, B or D");
  }
  if (d.n > 64 || d.q == 0) throw Error(ErrorCode::kInadmissibleParameters, "parameters out of range");
  validate(d);
  return d;
}

Descriptor Descriptor::oriflamme_unchecked(int n, std::uint32_t q) {
  Descriptor d;
  d.kind = Kind::kD;
  d.n = n;
  d.q = q;
  d.form = FormKind::kHyperbolic;
  return d;
}

Descriptor Descriptor::hyperbolic_host() const {
  Descriptor d = *this;
  d.kind = Kind::kB;
  d.two_e = 0;
  d.form = FormKind::kHyperbolic;
  return d;
}

}  // namespace oppflags
