//  Copyright 2026 The relfix Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relfix/base.hpp"
#include "relfix/bit_matrix.hpp"
#include "relfix/cover.hpp"

namespace relfix {

/// Reflexive and transitive relation; rel(p, q) means p precedes q.
class Quasiorder {
 public:
  /// Validates reflexivity and transitivity.
  static Quasiorder fromRelation(BitMatrix rel);
  /// Reflexive-transitive closure.
  static Quasiorder closureOf(BitMatrix rel);
  static Quasiorder discrete(BaseSize n) { return Quasiorder(BitMatrix::identity(n)); }
  static Quasiorder full(BaseSize n) { return Quasiorder(BitMatrix::full(n)); }

  BaseSize base() const { return rel_.base(); }
  std::size_t size() const noexcept { return rel_.dim(); }
  bool test(std::size_t p, std::size_t q) const noexcept { return rel_.test(p, q); }
  const BitMatrix& relation() const noexcept { return rel_; }

  friend bool operator==(const Quasiorder&, const Quasiorder&) = default;
  friend std::strong_ordering operator<=>(const Quasiorder& a, const Quasiorder& b) {
    return a.rel_ <=> b.rel_;
  }

 private:
  friend class QuasiorderLattice;
  explicit Quasiorder(BitMatrix rel) : rel_(std::move(rel)) {}

  BitMatrix rel_;
};

/// Indifference classes of a quasiorder and the strict order between them.
struct IndifferenceQuotient {
  explicit IndifferenceQuotient(const Quasiorder& q);

  std::size_t classCount() const noexcept { return reps.size(); }
  /// Non-strict order between classes a and b.
  bool below(std::size_t a, std::size_t b) const { return order[a * reps.size() + b]; }
  /// b is an immediate successor of a in the quotient order.
  bool hasseEdge(std::size_t a, std::size_t b) const;

  std::vector<std::size_t> classOf;               // per element, first-occurrence ids
  std::vector<std::size_t> reps;                  // smallest member per class
  std::vector<std::vector<std::size_t>> members;  // ascending
  std::vector<bool> order;                        // k x k
};

/// Lattice of quasiorders on n elements under inclusion.
///
/// Covers are read off the indifference quotient:
///   - lower: drop the order along one Hasse edge C < D of the quotient
///     (remove C x D), or split one class C into a lower part C1 and an upper
///     part C2 (remove C2 x C1);
///   - upper: for classes X, Y with X not below Y, add X <= Y and close, which
///     adds down(X) x up(Y). That is a cover iff no other unordered class pair
///     (X', Y') has X' <= X and Y <= Y'.
/// Cover payload: first = edit (kRemoveOrder, kSplit, kOrder), second = pair
/// index of the two class representatives (or the class representative for
/// splits), third = member mask of the lower part for splits.
class QuasiorderLattice {
 public:
  using Element = Quasiorder;
  using Cover = CoverDescriptor<Element>;
  static constexpr LatticeKind kind = LatticeKind::quasiorders;

  static constexpr std::uint64_t kRemoveOrder = 0;
  static constexpr std::uint64_t kSplit = 1;
  static constexpr std::uint64_t kOrder = 2;
  static constexpr std::size_t kMaxSplitClass = 63;

  explicit QuasiorderLattice(BaseSize n) : n_(n) {}

  BaseSize base() const { return n_; }

  bool leq(const Element& x, const Element& y) const;
  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element top() const { return Quasiorder::full(n_); }
  Element bottom() const { return Quasiorder::discrete(n_); }
  std::strong_ordering lexCompare(const Element& x, const Element& y) const;

  std::vector<Cover> covers(const Element& x, Direction dir) const;
  std::vector<Cover> lowerCovers(const Element& x) const { return covers(x, Direction::down); }
  std::vector<Cover> upperCovers(const Element& x) const { return covers(x, Direction::up); }
  std::optional<Cover> nextCover(const Element& x, Direction dir, const Cover* after) const;

  /// Upward: only class pairs already ordered by z can give a cover below z,
  /// so just those are materialized. Downward falls back to genericEntryBlocks.
  bool entryBlocks(const Element& u, const Cover& v, const Element& z, Direction dir) const;

  /// (n-1)(n+2)/2. Along a chain, the number of comparable unordered pairs plus
  /// n minus the number of indifference classes strictly grows at each cover
  /// and ranges from 0 to C(n,2) + n - 1; refining a linear order and then
  /// merging adjacent classes attains it.
  std::uint64_t height() const;
  /// 2^n - 2 lower covers of the full quasiorder, n(n-1) upper covers of the
  /// discrete one.
  std::uint64_t maxCovers(Direction dir) const;
  std::size_t pairCount(const Element& x) const { return x.relation().count(); }

  std::string encode(const Element& x) const;
  Element decode(std::string_view text) const;

  void forEachCover(const Element& x, Direction dir,
                    const std::function<void(Cover&&)>& visit) const;

 private:
  void check(const Element& x) const { requireSameBase(x.base(), n_); }

  BaseSize n_;
};

}  // namespace relfix

template <>
struct std::hash<relfix::Quasiorder> {
  std::size_t operator()(const relfix::Quasiorder& q) const noexcept {
    return q.relation().hash();
  }
};
