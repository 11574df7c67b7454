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

#include "oppflags/counts.hpp"

#include "oppflags/error.hpp"

namespace oppflags::counts {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kOutOfRangeIndex, what);
}

}  // namespace

BigInt v(int n, const QPower& q) {
  require(n >= 0, "v(n) needs n >= 0");
  return to_integer((q.pow(n + 1) - 1) / (q.q() - 1), "v(n)");
}

BigInt c(int n, const QPower& q) {
  BigInt r = 1;
  for (int i = 1; i <= n; ++i) r *= v(i, q);
  return r;
}

BigInt v(int n, HalfInt e, const QPower& q) {
  require(n >= 0, "v(n,e) needs n >= 0");
  return to_integer((q.pow(n) - 1) * (q.pow(e + (n - 1)) + 1) / (q.q() - 1), "v(n,e)");
}

BigInt c(int n, HalfInt e, const QPower& q) {
  BigInt r = 1;
  for (int i = 1; i <= n; ++i) r *= v(i, e, q);
  return r;
}

BigInt alpha(int n, HalfInt e, const QPower& q) {
  return to_integer(q.pow(e + (2 * n - 2)), "alpha");
}

BigInt beta(int n, HalfInt e, const QPower& q) {
  const Rational r = (q.q() - 1) * q.pow(e + (2 * n - 3)) + q.pow(n - 2) * (q.pow(e) - q.q());
  return to_integer(r, "beta");
}

BigInt gamma(int n, HalfInt e, const QPower& q) {
  return to_integer((q.q() - 1) * q.pow(e + (2 * n - 3)), "gamma");
}

BigInt opposite_subspaces(int n, HalfInt e, int i, const QPower& q) {
  require(i >= 0 && i <= n, "opposite_subspaces needs 0 <= i <= n");
  const HalfInt x = HalfInt::whole(2 * i * (n - i) + i * (i - 1) / 2) + e * i;
  return to_integer(q.pow(x), "d(n,e,i)");
}

BigInt class_size(const Descriptor& d, int i) {
  const QPower q(d.q);
  require(i >= 1 && i <= d.num_types(), "type index out of range");
  if (d.kind == Kind::kA) return c(d.n - 1, q) * to_integer(q.pow(i - 1), "q^{i-1}");
  const HalfInt e = d.e();
  const Rational scale = i <= d.n ? q.pow(i - 1) : q.pow(e + (i - 2));
  return c(d.n - 1, e, q) * to_integer(scale, "class size");
}

BigInt valency(const Descriptor& d) {
  const QPower q(d.q);
  switch (d.kind) {
    case Kind::kA: return to_integer(q.pow(d.n * (d.n + 1) / 2), "valency");
    case Kind::kD: return to_integer(q.pow(d.n * (d.n - 1)), "valency");
    case Kind::kB: break;
  }
  return to_integer(q.pow(d.e() * d.n + d.n * (d.n - 1)), "valency");
}

BigInt num_points(const Descriptor& d) {
  const QPower q(d.q);
  if (d.kind == Kind::kA) return v(d.n, q);
  return v(d.n, d.e(), q);
}

BigInt num_flags(const Descriptor& d) {
  const QPower q(d.q);
  switch (d.kind) {
    case Kind::kA: return c(d.n, q);
    case Kind::kD: return c(d.n, HalfInt{}, q) / 2;
    case Kind::kB: break;
  }
  return c(d.n, d.e(), q);
}

}  // namespace oppflags::counts
