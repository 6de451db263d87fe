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

#include "relfix/relation.hpp"

namespace relfix {

bool RelationLattice::leq(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return x.subsetOf(y);
}

RelationLattice::Element RelationLattice::meet(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return x & y;
}

RelationLattice::Element RelationLattice::join(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return x | y;
}

std::strong_ordering RelationLattice::lexCompare(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return x <=> y;
}

namespace {

RelationLattice::Cover removed(const BinaryRelation& x, std::size_t e) {
  BinaryRelation w = x;
  w.set(PairIndex{e}, false);
  return {CoverKind::removePair, {e, 0}, std::move(w)};
}

RelationLattice::Cover added(const BinaryRelation& x, std::size_t e) {
  BinaryRelation w = x;
  w.set(PairIndex{e});
  return {CoverKind::addPair, {e, 0}, std::move(w)};
}

}  // namespace

std::vector<RelationLattice::Cover> RelationLattice::covers(const Element& x,
                                                            Direction dir) const {
  check(x);
  std::vector<Cover> out;
  const std::size_t pairs = n_.pairs();
  if (dir == Direction::down) {
    for (std::size_t e = 0; e < pairs; ++e)
      if (x.test(PairIndex{e})) out.push_back(removed(x, e));
  } else {
    for (std::size_t e = pairs; e-- > 0;)
      if (!x.test(PairIndex{e})) out.push_back(added(x, e));
  }
  return out;
}

std::optional<RelationLattice::Cover> RelationLattice::nextCover(const Element& x, Direction dir,
                                                                 const Cover* after) const {
  check(x);
  const std::size_t pairs = n_.pairs();
  if (dir == Direction::down) {
    std::size_t e = after == nullptr ? 0 : after->payload.first + 1;
    for (; e < pairs; ++e)
      if (x.test(PairIndex{e})) return removed(x, e);
    return std::nullopt;
  }
  std::size_t e = after == nullptr ? pairs : after->payload.first;
  while (e-- > 0)
    if (!x.test(PairIndex{e})) return added(x, e);
  return std::nullopt;
}

bool RelationLattice::entryBlocks(const Element& u, const Cover& v, const Element& z,
                                  Direction dir) const {
  const std::size_t bound = v.payload.first;
  if (dir == Direction::down) {
    // some e in u \ z with e <= bound, and z inside u
    if (!z.subsetOf(u)) return false;
    for (std::size_t e = 0; e <= bound && e < n_.pairs(); ++e)
      if (u.test(PairIndex{e}) && !z.test(PairIndex{e})) return true;
    return false;
  }
  // some e in z \ u with e >= bound, and u inside z
  if (!u.subsetOf(z)) return false;
  for (std::size_t e = bound; e < n_.pairs(); ++e)
    if (z.test(PairIndex{e}) && !u.test(PairIndex{e})) return true;
  return false;
}

std::string RelationLattice::encode(const Element& x) const {
  check(x);
  return x.toBitString();
}

RelationLattice::Element RelationLattice::decode(std::string_view text) const {
  return BitMatrix::fromBitString(n_, text);
}

}  // namespace relfix
