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

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relfix/base.hpp"

namespace relfix {

enum class CoverKind {
  removePair,     // R lower cover; payload.first = removed pair index
  addPair,        // R upper cover; payload.first = added pair index
  splitClass,     // P lower cover; payload = (class id, bit mask of one part)
  mergeClasses,   // P upper cover; payload = (smaller class id, larger class id)
  quasiorderEdit  // Q cover; see QuasiorderLattice for the payload layout
};

/// A lower or upper cover of some parent element.
///
/// The covering element is kept materialized; `kind` and `payload` describe
/// the edit that produced it from the parent. The parent itself is not stored:
/// descriptors always travel next to their parent (in a SearchRegion entry or
/// an enumeration frame).
template <class Element>
struct CoverDescriptor {
  struct Payload {
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    std::uint64_t third = 0;
    friend bool operator==(const Payload&, const Payload&) = default;
  };

  CoverKind kind;
  Payload payload;
  Element element;
};

/// One (u, v) pair of the already searched region: fixed point u and the last
/// processed cover v of u.
template <class Element>
struct RegionEntry {
  Element fixedPoint;
  CoverDescriptor<Element> cover;
};

template <class Element>
using SearchRegion = std::vector<RegionEntry<Element>>;

/// The contract every relational lattice in this library satisfies.
template <class L>
concept RelationalLattice = requires(const L& lat, const typename L::Element& x,
                                     const typename L::Cover& c, Direction dir,
                                     std::string_view text) {
  typename L::Element;
  requires std::same_as<typename L::Cover, CoverDescriptor<typename L::Element>>;
  { L::kind } -> std::convertible_to<LatticeKind>;
  { lat.base() } -> std::same_as<BaseSize>;
  { lat.leq(x, x) } -> std::same_as<bool>;
  { lat.meet(x, x) } -> std::same_as<typename L::Element>;
  { lat.join(x, x) } -> std::same_as<typename L::Element>;
  { lat.top() } -> std::same_as<typename L::Element>;
  { lat.bottom() } -> std::same_as<typename L::Element>;
  { lat.lexCompare(x, x) } -> std::same_as<std::strong_ordering>;
  { lat.covers(x, dir) } -> std::same_as<std::vector<typename L::Cover>>;
  { lat.nextCover(x, dir, &c) } -> std::same_as<std::optional<typename L::Cover>>;
  { lat.entryBlocks(x, c, x, dir) } -> std::same_as<bool>;
  { lat.height() } -> std::convertible_to<std::uint64_t>;
  { lat.maxCovers(dir) } -> std::convertible_to<std::uint64_t>;
  { lat.pairCount(x) } -> std::convertible_to<std::size_t>;
  { lat.encode(x) } -> std::same_as<std::string>;
  { lat.decode(text) } -> std::same_as<typename L::Element>;
};

namespace detail {

/// Sorts covers into ascending lexicographic order of the covering elements.
template <class L>
void sortCovers(const L& lattice, std::vector<typename L::Cover>& covers) {
  std::sort(covers.begin(), covers.end(), [&](const auto& a, const auto& b) {
    return lattice.lexCompare(a.element, b.element) < 0;
  });
}

/// Lexicographic successor of `after` among the covers produced by `generate`
/// (a function taking a visitor). Keeps one candidate, so extra space is one
/// element regardless of the number of covers.
template <class L, class Generate>
std::optional<typename L::Cover> streamingNextCover(
    const L& lattice, Generate&& generate, const typename L::Cover* after) {
  std::optional<typename L::Cover> best;
  generate([&](typename L::Cover&& c) {
    if (after != nullptr && lattice.lexCompare(c.element, after->element) <= 0)
      return;
    if (!best || lattice.lexCompare(c.element, best->element) < 0)
      best = std::move(c);
  });
  return best;
}

}  // namespace detail

/// Reference test for one region entry: iterate the covers w of u in
/// lexicographic order up to and including v and check z <= w (down) or
/// z >= w (up). Lattices use this wherever no direct test is known.
template <class L>
bool genericEntryBlocks(const L& lattice, const typename L::Element& u,
                        const typename L::Cover& v,
                        const typename L::Element& z, Direction dir) {
  auto w = lattice.nextCover(u, dir, nullptr);
  while (w && lattice.lexCompare(w->element, v.element) <= 0) {
    if (dir == Direction::down ? lattice.leq(z, w->element)
                               : lattice.leq(w->element, z))
      return true;
    w = lattice.nextCover(u, dir, &*w);
  }
  return false;
}

/// True iff z lies in the region already searched: some entry (u, v) has a
/// cover w of u with w lexicographically at most v and z <= w (dually z >= w
/// for direction up).
template <class L>
bool regionBlocks(const L& lattice, std::span<const RegionEntry<typename L::Element>> region,
                  const typename L::Element& z, Direction dir) {
  for (const auto& entry : region) {
    const auto& u = entry.fixedPoint;
    const auto& w = entry.cover.element;
    const bool strict = dir == Direction::down ? lattice.leq(w, u) : lattice.leq(u, w);
    if (!strict || w == u)
      throw UsageError("region entry cover does not lie " +
                       std::string(dir == Direction::down ? "below" : "above") +
                       " its fixed point");
  }
  return std::any_of(region.begin(), region.end(), [&](const auto& entry) {
    return lattice.entryBlocks(entry.fixedPoint, entry.cover, z, dir);
  });
}

}  // namespace relfix
