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

#include "oppflags/finite_field.hpp"

#include <string>

#include "oppflags/error.hpp"

namespace oppflags {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

Poly digits(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
  Poly d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = d.size(); i-- > 0;) index = index * p + d[i];
  return index;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over GF(p); b must be nonzero after trimming.
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  // exhaustive search for a monic factor of degree 1..k/2
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = digits(static_cast<std::uint32_t>(idx), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  Poly r = poly_mod(prod, modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::kInadmissibleParameters, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorCode::kTooLarge, "field order exceeds " + std::to_string(kMaxOrder));
    }
  }

  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    f.modulus_ = {0, 1};
  } else {
    for (std::uint32_t idx = 0; idx < f.q_; ++idx) {
      Poly cand = digits(idx, p, k);
      cand.push_back(1);
      if (cand[0] != 0 && is_irreducible(cand, p)) {
        f.modulus_ = cand;
        break;
      }
    }
  }

  // least primitive element
  const std::uint32_t group = f.q_ - 1;
  f.exp_.assign(2 * static_cast<std::size_t>(group) + 1, 0);
  f.log_.assign(f.q_, kNoLog);
  bool found = group == 1;
  if (group == 1) {
    f.exp_ = {1, 1, 1};
    f.log_[1] = 0;
  }
  for (std::uint32_t g = 2; !found && g < f.q_; ++g) {
    const Poly gp = digits(g, p, k);
    Poly cur = digits(1, p, k);
    std::vector<std::uint32_t> powers;
    powers.reserve(group);
    bool ok = true;
    for (std::uint32_t e = 0; e < group; ++e) {
      const std::uint32_t c = encode(cur, p);
      if (e > 0 && c == 1) {
        ok = false;
        break;
      }
      powers.push_back(c);
      cur = k == 1 ? Poly{static_cast<std::uint32_t>(static_cast<std::uint64_t>(cur[0]) * g % p)}
                   : poly_mulmod(cur, gp, f.modulus_, p);
    }
    if (!ok) continue;
    for (std::uint32_t e = 0; e < group; ++e) {
      f.exp_[e] = powers[e];
      f.exp_[e + group] = powers[e];
      f.log_[powers[e]] = e;
    }
    found = true;
  }

  f.neg_.resize(f.q_);
  for (std::uint32_t idx = 0; idx < f.q_; ++idx) {
    Poly d = digits(idx, p, k);
    for (auto& c : d) c = (p - c) % p;
    f.neg_[idx] = encode(d, p);
  }

  f.zech_.assign(group, kNoLog);
  for (std::uint32_t d = 0; d < group; ++d) {
    Poly v = digits(f.exp_[d], p, k);
    v[0] = (v[0] + 1) % p;
    const std::uint32_t s = encode(v, p);
    f.zech_[d] = s == 0 ? kNoLog : f.log_[s];
  }
  return f;
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::kNonPrime, "field order must be a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(ErrorCode::kNonPrime, std::to_string(q) + " is not a prime power");
  return make(p, k);
}

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= q_) throw Error(ErrorCode::kOutOfRangeIndex, "element index out of range");
  return {index};
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.index == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[a.index];
  return {exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

FieldElement FiniteField::pow(FieldElement a, std::int64_t e) const {
  if (a.index == 0) {
    if (e < 0) throw Error(ErrorCode::kDivisionByZero, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t group = q_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_[a.index]) * (e % group)) % group;
  if (l < 0) l += group;
  return {exp_[static_cast<std::size_t>(l)]};
}

FieldElement FiniteField::conj(FieldElement a) const {
  if (k_ % 2 != 0) throw Error(ErrorCode::kOddDegreeField, "conjugation needs an even extension degree");
  std::int64_t e = 1;
  for (std::uint32_t i = 0; i < k_ / 2; ++i) e *= p_;
  return pow(a, e);
}

std::uint64_t FiniteField::multiplicative_order(FieldElement a) const {
  if (a.index == 0) throw Error(ErrorCode::kDivisionByZero, "zero has no multiplicative order");
  std::uint64_t order = 1;
  FieldElement x = a;
  while (x != one()) {
    x = mul(x, a);
    ++order;
  }
  return order;
}

bool FiniteField::is_square(FieldElement a) const noexcept {
  if (a.index == 0 || p_ == 2) return true;
  return log_[a.index] % 2 == 0;
}

}  // namespace oppflags
