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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "oppflags/descriptor.hpp"
#include "oppflags/finite_field.hpp"

namespace oppflags {

using Vec = std::vector<FieldElement>;

/// Fixed-size bitset over the points of a geometry.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void fill();

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool intersects(const PointSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  bool subset_of(const PointSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  PointSet& operator&=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  PointSet& operator|=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes the members of `o`.
  PointSet& subtract(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  /// Calls f(index) for each member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
  std::vector<std::uint32_t> members() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

/// A subspace in canonical reduced row-echelon form.
struct Subspace {
  int rank = 0;
  int dim = 0;
  std::vector<FieldElement> rref;  // rank rows of dim entries

  std::span<const FieldElement> row(int i) const { return {rref.data() + i * dim, static_cast<std::size_t>(dim)}; }

  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

enum class PointRelation { kEqual, kCollinear, kOpposite, kDistinct };

struct FormSpec {
  FormKind kind = FormKind::kNone;
  int dim = 0;
  /// B(x,y) = sum_{a,b} x_a gram[a][b] s(y_b) with s the conjugation for hermitian forms.
  std::vector<FieldElement> gram;
  /// Q(x) = sum_a quad_diag[a] x_a^2 + sum_{a<b} gram[a][b] x_a x_b for quadratic kinds.
  std::vector<FieldElement> quad_diag;
};

class Geometry {
 public:
  /// Builds the standard form for the descriptor. Oriflamme descriptors get their hyperbolic host.
  static Geometry build(const Descriptor& d);

  const Descriptor& descriptor() const noexcept { return desc_; }
  const FiniteField& field() const noexcept { return field_; }
  int dim() const noexcept { return dim_; }
  bool is_polar() const noexcept { return desc_.kind != Kind::kA; }
  const FormSpec& form() const noexcept { return form_; }

  std::size_t num_points() const noexcept { return points_.size(); }
  const Vec& point(std::size_t i) const { return points_[i]; }
  /// Index of the point spanned by `v`; nullopt for zero or non-singular vectors.
  std::optional<std::uint32_t> point_index(std::span<const FieldElement> v) const;

  FieldElement bilinear(std::span<const FieldElement> x, std::span<const FieldElement> y) const;
  FieldElement quadratic(std::span<const FieldElement> x) const;
  bool is_singular(std::span<const FieldElement> x) const;

  /// Points in X^perp (X included). Throws kTypeAHasNoPerp for projective spaces.
  const PointSet& perp_points(std::uint32_t x) const;
  PointRelation relation(std::uint32_t x, std::uint32_t y) const;
  /// Number of points opposite `x`; kTypeAHasNoCollinearity for projective spaces.
  std::size_t opposite_count(std::uint32_t x) const;

  Subspace span(std::span<const Vec> vectors) const;
  Subspace span_points(std::span<const std::uint32_t> points) const;
  PointSet points_of(const Subspace& u) const;
  /// Full perp subspace of `u` (rank dim - rank u). kTypeAHasNoPerp for projective spaces.
  Subspace perp(const Subspace& u) const;
  /// Polar points in u^perp; u must be spanned by singular points.
  PointSet perp_points_of(const Subspace& u) const;
  bool contains(const Subspace& u, std::span<const FieldElement> v) const;
  Subspace intersect(const Subspace& a, const Subspace& b) const;

  /// Radical of the reflexive form (nonzero only for parabolic forms in characteristic 2).
  Subspace radical() const;

 private:
  Geometry(const Descriptor& d, FiniteField f) : desc_(d), field_(std::move(f)) {}

  std::uint64_t key(std::span<const FieldElement> v) const;

  Descriptor desc_;
  FiniteField field_;
  int dim_ = 0;
  FormSpec form_;
  std::vector<Vec> points_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<PointSet> perp_;
};

/// Reduced row-echelon form of `rows` (each of length `dim`) with zero rows dropped.
Subspace rref(const FiniteField& f, int dim, std::vector<FieldElement> rows);

}  // namespace oppflags
