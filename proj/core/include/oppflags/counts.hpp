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

#pragma once

#include "oppflags/descriptor.hpp"
#include "oppflags/qpower.hpp"

namespace oppflags::counts {

/// Points of PG(n,q): (q^{n+1}-1)/(q-1).
BigInt v(int n, const QPower& q);
/// Maximal flags of PG(n,q): v(1)...v(n); c(0) = 1.
BigInt c(int n, const QPower& q);

/// Points of PS(n,e,q): (q^n-1)(q^{n-1+e}+1)/(q-1).
BigInt v(int n, HalfInt e, const QPower& q);
/// Maximal flags of PS(n,e,q); c(0,e) = 1.
BigInt c(int n, HalfInt e, const QPower& q);

/// Points opposite a fixed point: q^{2n+e-2}.
BigInt alpha(int n, HalfInt e, const QPower& q);
/// Points opposite both points of an opposite pair.
BigInt beta(int n, HalfInt e, const QPower& q);
/// Points opposite both points of a collinear pair.
BigInt gamma(int n, HalfInt e, const QPower& q);
/// Rank-i subspaces opposite a fixed rank-i subspace: q^{2i(n-i)+ie+C(i,2)}.
BigInt opposite_subspaces(int n, HalfInt e, int i, const QPower& q);

/// |C_i^X|, flags of type i with respect to a fixed point (A and B).
BigInt class_size(const Descriptor& d, int i);

/// Degree of the opposition graph on maximal flags.
BigInt valency(const Descriptor& d);

/// Number of points of the geometry (the host polar space for D).
BigInt num_points(const Descriptor& d);
/// Number of maximal flags; oriflamme flags count c(n,0)/2.
BigInt num_flags(const Descriptor& d);

}  // namespace oppflags::counts
