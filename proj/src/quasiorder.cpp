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

#include "relfix/quasiorder.hpp"

namespace relfix {

Quasiorder Quasiorder::fromRelation(BitMatrix rel) {
  if (!rel.isReflexive()) throw UsageError("quasiorder must be reflexive");
  if (!rel.isTransitive()) throw UsageError("quasiorder must be transitive");
  return Quasiorder(std::move(rel));
}

Quasiorder Quasiorder::closureOf(BitMatrix rel) {
  for (std::size_t i = 0; i < rel.dim(); ++i) rel.set(i, i);
  rel.closeTransitively();
  return Quasiorder(std::move(rel));
}

IndifferenceQuotient::IndifferenceQuotient(const Quasiorder& q) {
  const std::size_t n = q.size();
  classOf.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (classOf[i] != n) continue;
    const std::size_t id = reps.size();
    reps.push_back(i);
    members.emplace_back();
    for (std::size_t j = i; j < n; ++j) {
      if (q.test(i, j) && q.test(j, i)) {
        classOf[j] = id;
        members.back().push_back(j);
      }
    }
  }
  const std::size_t k = reps.size();
  order.assign(k * k, false);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) order[a * k + b] = q.test(reps[a], reps[b]);
}

bool IndifferenceQuotient::hasseEdge(std::size_t a, std::size_t b) const {
  if (a == b || !below(a, b)) return false;
  for (std::size_t c = 0; c < classCount(); ++c)
    if (c != a && c != b && below(a, c) && below(c, b)) return false;
  return true;
}

bool QuasiorderLattice::leq(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return x.relation().subsetOf(y.relation());
}

QuasiorderLattice::Element QuasiorderLattice::meet(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return Quasiorder(x.relation() & y.relation());
}

QuasiorderLattice::Element QuasiorderLattice::join(const Element& x, const Element& y) const {
  check(x);
  check(y);
  BitMatrix u = x.relation() | y.relation();
  u.closeTransitively();
  return Quasiorder(std::move(u));
}

std::strong_ordering QuasiorderLattice::lexCompare(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return x <=> y;
}

void QuasiorderLattice::forEachCover(const Element& x, Direction dir,
                                     const std::function<void(Cover&&)>& visit) const {
  check(x);
  const IndifferenceQuotient quo(x);
  const std::size_t k = quo.classCount();
  const BaseSize n = n_;

  if (dir == Direction::down) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!quo.hasseEdge(a, b)) continue;
        BitMatrix w = x.relation();
        for (auto p : quo.members[a])
          for (auto q : quo.members[b]) w.reset(p, q);
        visit(Cover{CoverKind::quasiorderEdit,
                    {kRemoveOrder, PairIndex::of(quo.reps[a], quo.reps[b], n).idx, 0},
                    Quasiorder(std::move(w))});
      }
    }
    for (std::size_t c = 0; c < k; ++c) {
      const auto& mem = quo.members[c];
      const std::size_t s = mem.size();
      if (s < 2) continue;
      if (s > kMaxSplitClass)
        throw UsageError("class of size " + std::to_string(s) + " is too large to split");
      const std::uint64_t all = (std::uint64_t{1} << s) - 1;
      for (std::uint64_t lower = 1; lower < all; ++lower) {
        BitMatrix w = x.relation();
        for (std::size_t i = 0; i < s; ++i) {
          if ((lower >> i) & 1u) continue;  // mem[i] is in the upper part
          for (std::size_t j = 0; j < s; ++j)
            if ((lower >> j) & 1u) w.reset(mem[i], mem[j]);
        }
        visit(Cover{CoverKind::quasiorderEdit, {kSplit, quo.reps[c], lower},
                    Quasiorder(std::move(w))});
      }
    }
    return;
  }

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b || quo.below(a, b)) continue;
      bool minimal = true;
      for (std::size_t a2 = 0; a2 < k && minimal; ++a2) {
        if (!quo.below(a2, a)) continue;
        for (std::size_t b2 = 0; b2 < k; ++b2) {
          if ((a2 == a && b2 == b) || !quo.below(b, b2) || quo.below(a2, b2)) continue;
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      BitMatrix w = x.relation();
      for (std::size_t p = 0; p < n.value(); ++p) {
        if (!x.test(p, quo.reps[a])) continue;
        for (std::size_t q = 0; q < n.value(); ++q)
          if (x.test(quo.reps[b], q)) w.set(p, q);
      }
      visit(Cover{CoverKind::quasiorderEdit,
                  {kOrder, PairIndex::of(quo.reps[a], quo.reps[b], n).idx, 0},
                  Quasiorder(std::move(w))});
    }
  }
}

std::vector<QuasiorderLattice::Cover> QuasiorderLattice::covers(const Element& x,
                                                               Direction dir) const {
  std::vector<Cover> out;
  forEachCover(x, dir, [&](Cover&& c) { out.push_back(std::move(c)); });
  detail::sortCovers(*this, out);
  return out;
}

std::optional<QuasiorderLattice::Cover> QuasiorderLattice::nextCover(const Element& x,
                                                                     Direction dir,
                                                                     const Cover* after) const {
  return detail::streamingNextCover(
      *this, [&](auto&& visit) { forEachCover(x, dir, visit); }, after);
}

bool QuasiorderLattice::entryBlocks(const Element& u, const Cover& v, const Element& z,
                                    Direction dir) const {
  if (dir == Direction::down) return genericEntryBlocks(*this, u, v, z, dir);
  if (!leq(u, z)) return false;
  bool found = false;
  forEachCover(u, Direction::up, [&](Cover&& w) {
    if (found) return;
    const PairIndex gen{w.payload.second};
    if (!z.test(gen.row(n_), gen.col(n_))) return;
    if (lexCompare(w.element, v.element) <= 0) found = true;
  });
  return found;
}

std::uint64_t QuasiorderLattice::height() const {
  const std::uint64_t n = n_.value();
  return (n - 1) * (n + 2) / 2;
}

std::uint64_t QuasiorderLattice::maxCovers(Direction dir) const {
  const std::uint64_t n = n_.value();
  if (dir == Direction::up) return n * (n - 1);
  return (std::uint64_t{1} << n) - 2;
}

std::string QuasiorderLattice::encode(const Element& x) const {
  check(x);
  return x.relation().toBitString();
}

QuasiorderLattice::Element QuasiorderLattice::decode(std::string_view text) const {
  return Quasiorder::fromRelation(BitMatrix::fromBitString(n_, text));
}

}  // namespace relfix
