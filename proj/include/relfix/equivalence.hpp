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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relfix/base.hpp"
#include "relfix/bit_matrix.hpp"
#include "relfix/cover.hpp"

namespace relfix {

/// Partition of {0..n-1} stored as class ids in first-occurrence order:
/// classOf[0] == 0 and every new id is one more than the largest id seen so
/// far. Equal partitions therefore have equal arrays.
class Equivalence {
 public:
  using ClassId = std::uint32_t;

  /// Canonicalizes arbitrary labels.
  static Equivalence fromLabels(std::span<const std::size_t> labels);
  static Equivalence singletons(BaseSize n);
  static Equivalence singleClass(BaseSize n);
  /// Classes of the reflexive-symmetric-transitive closure of `rel`.
  static Equivalence closureOf(const BitMatrix& rel);

  BaseSize base() const { return BaseSize(classOf_.size()); }
  std::size_t size() const noexcept { return classOf_.size(); }
  ClassId classOf(std::size_t i) const { return classOf_[i]; }
  std::span<const ClassId> classIds() const noexcept { return classOf_; }
  std::size_t classCount() const noexcept { return classCount_; }
  bool related(std::size_t p, std::size_t q) const { return classOf_[p] == classOf_[q]; }

  /// Members of every class, classes ordered by id, members ascending.
  std::vector<std::vector<std::size_t>> classes() const;
  BitMatrix relation() const;

  friend bool operator==(const Equivalence& a, const Equivalence& b) {
    return a.classOf_ == b.classOf_;
  }

  std::size_t hash() const noexcept;

 private:
  explicit Equivalence(std::vector<ClassId> canonical);

  std::vector<ClassId> classOf_;
  std::size_t classCount_ = 0;
};

/// Lattice of equivalences (partitions) on n elements under refinement.
///
/// Lower covers split one class into two nonempty parts; upper covers merge
/// two classes. Both streams are ordered by lexCompare of the induced
/// relations. A merge of classes with minimum elements a < b first adds pair
/// index a*n+b, and of two merges the one adding the smaller index is the
/// lexicographically larger, so upper covers have a direct region test.
class EquivalenceLattice {
 public:
  using Element = Equivalence;
  using Cover = CoverDescriptor<Element>;
  static constexpr LatticeKind kind = LatticeKind::equivalences;

  /// Largest class that can still be split (split masks are 64 bit).
  static constexpr std::size_t kMaxSplitClass = 63;

  explicit EquivalenceLattice(BaseSize n) : n_(n) {}

  BaseSize base() const { return n_; }

  bool leq(const Element& x, const Element& y) const;
  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element top() const { return Equivalence::singleClass(n_); }
  Element bottom() const { return Equivalence::singletons(n_); }
  std::strong_ordering lexCompare(const Element& x, const Element& y) const;

  std::vector<Cover> covers(const Element& x, Direction dir) const;
  std::vector<Cover> lowerCovers(const Element& x) const { return covers(x, Direction::down); }
  std::vector<Cover> upperCovers(const Element& x) const { return covers(x, Direction::up); }
  std::optional<Cover> nextCover(const Element& x, Direction dir, const Cover* after) const;

  /// Direct O(n + k^2) test upward; splits fall back to genericEntryBlocks.
  bool entryBlocks(const Element& u, const Cover& v, const Element& z, Direction dir) const;

  std::uint64_t height() const { return n_.value() - 1; }
  /// 2^(n-1) - 1 splits of the single class downward, C(n, 2) merges of the
  /// singletons upward.
  std::uint64_t maxCovers(Direction dir) const;
  std::size_t pairCount(const Element& x) const;

  /// Space separated class ids, e.g. "0 0 1".
  std::string encode(const Element& x) const;
  /// Accepts any non-negative labels and canonicalizes them.
  Element decode(std::string_view text) const;

  /// Visits every cover of x once, in no particular order.
  void forEachCover(const Element& x, Direction dir,
                    const std::function<void(Cover&&)>& visit) const;

 private:
  void check(const Element& x) const { requireSameBase(x.base(), n_); }

  BaseSize n_;
};

}  // namespace relfix

template <>
struct std::hash<relfix::Equivalence> {
  std::size_t operator()(const relfix::Equivalence& e) const noexcept { return e.hash(); }
};
