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

// Brute-force ground truth for small lattices. Nothing here uses covers,
// limits or the enumerator; everything is computed from the order alone.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "relfix/equivalence.hpp"
#include "relfix/maps.hpp"
#include "relfix/quasiorder.hpp"
#include "relfix/relation.hpp"

namespace relfix {

/// Largest base size the oracle will tabulate per lattice kind (about 10^6
/// elements at most: Bell(9) = 21147, 355 quasiorders and 2^16 relations on 4).
constexpr std::size_t oracleBound(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::equivalences: return 9;
    case LatticeKind::quasiorders: return 4;
    case LatticeKind::relations: return 4;
  }
  return 0;
}

/// Every element of a small lattice plus its order.
template <RelationalLattice L>
class SmallLatticeTable {
 public:
  using Element = typename L::Element;

  /// Above this many elements the order matrix is not precomputed.
  static constexpr std::size_t kMatrixLimit = 4096;

  SmallLatticeTable(L lattice, std::vector<Element> elements)
      : lattice_(std::move(lattice)), elements_(std::move(elements)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(elements_[i], i).second)
        throw ContractViolation("duplicate element in lattice table");
    }
    if (elements_.size() <= kMatrixLimit) {
      const std::size_t m = elements_.size();
      leq_.assign(m * m, false);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          leq_[i * m + j] = lattice_.leq(elements_[i], elements_[j]);
    }
  }

  const L& lattice() const noexcept { return lattice_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }

  std::size_t indexOf(const Element& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw UsageError("element not in lattice table");
    return it->second;
  }

  bool leq(std::size_t i, std::size_t j) const {
    if (!leq_.empty()) return leq_[i * elements_.size() + j];
    return lattice_.leq(elements_[i], elements_[j]);
  }
  bool hasMatrix() const noexcept { return !leq_.empty(); }

 private:
  L lattice_;
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t> index_;
  std::vector<bool> leq_;
};

namespace oracle_detail {

inline std::vector<BinaryRelation> allRelations(BaseSize n) {
  const std::size_t pairs = n.pairs();
  std::vector<BinaryRelation> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    BinaryRelation r(n);
    for (std::size_t e = 0; e < pairs; ++e)
      if ((mask >> e) & 1u) r.set(PairIndex{e});
    out.push_back(std::move(r));
  }
  return out;
}

/// Restricted growth strings a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
inline std::vector<Equivalence> allPartitions(BaseSize n) {
  std::vector<Equivalence> out;
  std::vector<std::size_t> a(n.value(), 0);
  std::vector<std::size_t> maxPrefix(n.value(), 0);
  for (;;) {
    out.push_back(Equivalence::fromLabels(a));
    std::size_t i = n.value();
    while (--i > 0) {
      if (a[i] <= maxPrefix[i - 1]) break;
    }
    if (i == 0) break;
    ++a[i];
    maxPrefix[i] = std::max(maxPrefix[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n.value(); ++j) {
      a[j] = 0;
      maxPrefix[j] = maxPrefix[i];
    }
  }
  return out;
}

inline void checkBound(LatticeKind kind, BaseSize n) {
  if (n.value() > oracleBound(kind)) {
    throw UsageError(std::string("oracle tables for ") + toString(kind) + " are limited to n <= " +
                     std::to_string(oracleBound(kind)) + ", got n = " + std::to_string(n.value()));
  }
}

}  // namespace oracle_detail

inline SmallLatticeTable<RelationLattice> enumerateAll(const RelationLattice& lattice) {
  oracle_detail::checkBound(LatticeKind::relations, lattice.base());
  return {lattice, oracle_detail::allRelations(lattice.base())};
}

inline SmallLatticeTable<QuasiorderLattice> enumerateAll(const QuasiorderLattice& lattice) {
  oracle_detail::checkBound(LatticeKind::quasiorders, lattice.base());
  std::vector<Quasiorder> out;
  for (auto& r : oracle_detail::allRelations(lattice.base()))
    if (r.isReflexive() && r.isTransitive()) out.push_back(Quasiorder::fromRelation(std::move(r)));
  return {lattice, std::move(out)};
}

inline SmallLatticeTable<EquivalenceLattice> enumerateAll(const EquivalenceLattice& lattice) {
  oracle_detail::checkBound(LatticeKind::equivalences, lattice.base());
  return {lattice, oracle_detail::allPartitions(lattice.base())};
}

/// Sorts elements lexicographically (the lattice's total order).
template <RelationalLattice L>
void sortLex(const L& lattice, std::vector<typename L::Element>& xs) {
  std::sort(xs.begin(), xs.end(),
            [&](const auto& a, const auto& b) { return lattice.lexCompare(a, b) < 0; });
}

/// {x : f(x) = x}, lexicographically sorted.
template <RelationalLattice L>
std::vector<typename L::Element> bruteForceFixedPoints(const IsotoneMap<L>& f,
                                                       const SmallLatticeTable<L>& table) {
  std::vector<typename L::Element> out;
  for (const auto& x : table.elements())
    if (f(x) == x) out.push_back(x);
  sortLex(table.lattice(), out);
  return out;
}

/// Covers by definition: y strictly above x (below for down) with nothing
/// strictly in between. Lexicographically sorted.
template <RelationalLattice L>
std::vector<typename L::Element> bruteForceCovers(const typename L::Element& x,
                                                  const SmallLatticeTable<L>& table,
                                                  Direction dir) {
  const std::size_t xi = table.indexOf(x);
  std::vector<std::size_t> beyond;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i == xi) continue;
    if (dir == Direction::up ? table.leq(xi, i) : table.leq(i, xi)) beyond.push_back(i);
  }
  std::vector<typename L::Element> out;
  for (std::size_t y : beyond) {
    bool between = false;
    for (std::size_t z : beyond) {
      if (z == y) continue;
      if (dir == Direction::up ? table.leq(z, y) : table.leq(y, z)) {
        between = true;
        break;
      }
    }
    if (!between) out.push_back(table[y]);
  }
  sortLex(table.lattice(), out);
  return out;
}

/// Length of the longest chain, by dynamic programming over a linear extension.
template <RelationalLattice L>
std::size_t longestChain(const SmallLatticeTable<L>& table) {
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return table.lattice().pairCount(table[a]) < table.lattice().pairCount(table[b]);
  });
  std::vector<std::size_t> depth(table.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t a = order[j], b = order[i];
      if (table.leq(a, b) && a != b) depth[b] = std::max(depth[b], depth[a] + 1);
    }
    best = std::max(best, depth[order[i]]);
  }
  return best;
}

/// Exhaustive pairwise check x <= y  =>  f(x) <= f(y), plus the declared
/// direction when the map claims one.
template <RelationalLattice L>
bool isIsotoneOn(const IsotoneMap<L>& f, const SmallLatticeTable<L>& table) {
  const L& lat = table.lattice();
  std::vector<typename L::Element> images;
  images.reserve(table.size());
  for (const auto& x : table.elements()) images.push_back(f(x));
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (f.declaredClass() == MapClass::decreasing && !lat.leq(images[i], table[i])) return false;
    if (f.declaredClass() == MapClass::increasing && !lat.leq(table[i], images[i])) return false;
    for (std::size_t j = 0; j < table.size(); ++j)
      if (table.leq(i, j) && !lat.leq(images[i], images[j])) return false;
  }
  return true;
}

/// Deterministic random isotone map given as a lookup table.
///
/// Elements are visited in a linear extension of the order (pair count, then
/// lexicographic). Each x gets an image chosen uniformly among the z above the
/// join of the images of everything strictly below x, additionally z <= x for
/// dec-iso or z >= x for inc-iso. Since the images of all strict predecessors
/// are already fixed and below the chosen z, the result is isotone.
template <RelationalLattice L>
IsotoneMap<L> randomIsotoneMap(const SmallLatticeTable<L>& table, std::uint64_t seed,
                               MapClass cls) {
  const L& lat = table.lattice();
  const std::size_t m = table.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = lat.pairCount(table[a]);
    const auto cb = lat.pairCount(table[b]);
    if (ca != cb) return ca < cb;
    return lat.lexCompare(table[a], table[b]) < 0;
  });

  std::mt19937_64 rng(seed);
  auto images = std::make_shared<std::vector<std::size_t>>(m, 0);
  std::vector<bool> done(m, false);
  std::vector<std::size_t> candidates;
  for (std::size_t x : order) {
    auto floor = lat.bottom();
    for (std::size_t y = 0; y < m; ++y) {
      if (y == x || !table.leq(y, x)) continue;
      if (!done[y]) throw ContractViolation("linear extension visited a successor first");
      floor = lat.join(floor, table[(*images)[y]]);
    }
    const std::size_t floorIdx = table.indexOf(floor);
    candidates.clear();
    for (std::size_t z = 0; z < m; ++z) {
      if (!table.leq(floorIdx, z)) continue;
      if (cls == MapClass::decreasing && !table.leq(z, x)) continue;
      if (cls == MapClass::increasing && !table.leq(x, z)) continue;
      candidates.push_back(z);
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    (*images)[x] = candidates[pick(rng)];
    done[x] = true;
  }

  auto tableCopy = std::make_shared<SmallLatticeTable<L>>(table);
  return IsotoneMap<L>(
      lat,
      [tableCopy, images](const typename L::Element& x) {
        return (*tableCopy)[(*images)[tableCopy->indexOf(x)]];
      },
      cls, std::string("random-") + toString(cls) + "#" + std::to_string(seed));
}

}  // namespace relfix
