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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relfix/base.hpp"
#include "relfix/bit_matrix.hpp"
#include "relfix/cover.hpp"

namespace relfix {

using BinaryRelation = BitMatrix;

/// All binary relations on n elements ordered by inclusion.
///
/// Lower covers remove one pair, upper covers add one. Removing pair e gives
/// a lexicographically smaller cover the smaller e is, adding pair e gives a
/// larger one, so lower covers stream by ascending pair index and upper covers
/// by descending pair index.
class RelationLattice {
 public:
  using Element = BinaryRelation;
  using Cover = CoverDescriptor<Element>;
  static constexpr LatticeKind kind = LatticeKind::relations;

  explicit RelationLattice(BaseSize n) : n_(n) {}

  BaseSize base() const { return n_; }

  bool leq(const Element& x, const Element& y) const;
  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element top() const { return BitMatrix::full(n_); }
  Element bottom() const { return BitMatrix(n_); }
  std::strong_ordering lexCompare(const Element& x, const Element& y) const;

  std::vector<Cover> covers(const Element& x, Direction dir) const;
  std::vector<Cover> lowerCovers(const Element& x) const { return covers(x, Direction::down); }
  std::vector<Cover> upperCovers(const Element& x) const { return covers(x, Direction::up); }

  /// Lexicographic successor of `after` among the covers of x; the first
  /// cover when `after` is null.
  std::optional<Cover> nextCover(const Element& x, Direction dir, const Cover* after) const;

  /// O(n^2) test for a single region entry (u, v); see regionBlocks.
  bool entryBlocks(const Element& u, const Cover& v, const Element& z, Direction dir) const;

  /// n^2: the chain from the empty relation to the full one adds one pair at a time.
  std::uint64_t height() const { return n_.pairs(); }
  std::uint64_t maxCovers(Direction) const { return n_.pairs(); }
  std::size_t pairCount(const Element& x) const { return x.count(); }

  std::string encode(const Element& x) const;
  Element decode(std::string_view text) const;

 private:
  void check(const Element& x) const { requireSameBase(x.base(), n_); }

  BaseSize n_;
};

}  // namespace relfix
