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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "relfix/cover.hpp"
#include "relfix/maps.hpp"

namespace relfix {

/// One frame of the depth-first search: a fixed point on the active path and
/// the last cover of it whose subtree is finished. Together the frames are the
/// searched region, so nothing else about discovered fixed points is stored.
template <class Element>
struct ActivePathEntry {
  Element fixedPoint;
  std::optional<CoverDescriptor<Element>> lastCover;
  /// Cover whose subtree is being searched right now; becomes lastCover when
  /// the child frame is popped.
  std::optional<CoverDescriptor<Element>> inFlight;
};

template <class Element>
struct EnumerationConfig {
  /// Upper bound for decreasing runs, lower bound for increasing ones.
  /// Defaults to top resp. bottom.
  std::optional<Element> start;
  std::optional<std::size_t> maxOutputs;
  bool collectStats = true;
  /// Called right before each fixed point is output with the active path the
  /// search holds at that moment (the new fixed point is not on it yet).
  std::function<void(const Element&, std::span<const ActivePathEntry<Element>>)> onVisit;
};

struct EnumerationStats {
  std::size_t outputs = 0;
  /// Only for enumerateGeneral: outputs of the associated map that were not
  /// fixed points of the original one.
  std::size_t suppressed = 0;
  /// Limit computations between consecutive outputs (collectStats only).
  std::vector<std::uint64_t> limitQueriesPerGap;
  std::uint64_t maxGap = 0;
  std::uint64_t leadingLimitQueries = 0;
  std::uint64_t trailingLimitQueries = 0;
  std::size_t maxActiveDepth = 0;
  std::uint64_t mapQueries = 0;
  std::uint64_t limitQueries = 0;
  std::uint64_t longestLimit = 0;
  /// Map queries spent deciding which outputs to forward (enumerateGeneral).
  std::uint64_t filterQueries = 0;
};

/// Delay bound h(L) * lcv(L) (down) or h(L) * ucv(L) (up) in limit queries.
template <RelationalLattice L>
std::uint64_t delayBound(const L& lattice, Direction dir) {
  return lattice.height() * lattice.maxCovers(dir);
}

namespace detail {

template <class Sink, class Element>
bool deliver(Sink& sink, const Element& x) {
  if constexpr (std::is_same_v<std::invoke_result_t<Sink&, const Element&>, bool>) {
    return sink(x);
  } else {
    sink(x);
    return true;
  }
}

/// Depth-first enumeration with an explicit stack. `emit(x)` receives every
/// output and returns false to stop.
template <RelationalLattice L, class Emit>
EnumerationStats searchFixedPoints(const IsotoneMap<L>& f, Direction dir,
                                   const EnumerationConfig<typename L::Element>& config,
                                   Emit&& emit) {
  using Element = typename L::Element;
  const MapClass required = dir == Direction::down ? MapClass::decreasing : MapClass::increasing;
  if (f.declaredClass() != required) {
    throw UsageError(std::string("enumeration ") + (dir == Direction::down ? "down" : "up") +
                     " needs a map declared " + toString(required) + ", got '" + f.name() +
                     "' (" + toString(f.declaredClass()) + ")");
  }
  const L& lattice = f.lattice();
  QueryCounter counter;
  EnumerationStats stats;
  std::uint64_t gapStart = 0;
  bool stopped = false;

  auto output = [&](const Element& x) {
    const std::uint64_t gap = counter.limitQueries - gapStart;
    if (stats.outputs == 0) {
      stats.leadingLimitQueries = gap;
    } else {
      stats.maxGap = std::max(stats.maxGap, gap);
      if (config.collectStats) stats.limitQueriesPerGap.push_back(gap);
    }
    gapStart = counter.limitQueries;
    ++stats.outputs;
    if (!emit(x)) stopped = true;
    if (config.maxOutputs && stats.outputs >= *config.maxOutputs) stopped = true;
  };

  std::vector<ActivePathEntry<Element>> path;
  auto visit = [&](const Element& z) {
    if (config.onVisit) config.onVisit(z, std::span<const ActivePathEntry<Element>>(path));
    output(z);
    path.push_back(ActivePathEntry<Element>{z, std::nullopt, std::nullopt});
    stats.maxActiveDepth = std::max(stats.maxActiveDepth, path.size());
  };

  const Element start =
      config.start ? *config.start : (dir == Direction::down ? lattice.top() : lattice.bottom());
  requireSameBase(start.base(), lattice.base());
  visit(limit(f, start, &counter));

  auto blocked = [&](const Element& z) {
    for (const auto& frame : path)
      if (frame.lastCover && lattice.entryBlocks(frame.fixedPoint, *frame.lastCover, z, dir))
        return true;
    return false;
  };

  while (!path.empty() && !stopped) {
    auto& frame = path.back();
    if (frame.inFlight) {
      frame.lastCover = std::move(frame.inFlight);
      frame.inFlight.reset();
    }
    auto next = lattice.nextCover(frame.fixedPoint, dir,
                                  frame.lastCover ? &*frame.lastCover : nullptr);
    if (!next) {
      path.pop_back();
      continue;
    }
    Element z = limit(f, next->element, &counter);
    if (blocked(z)) {
      frame.lastCover = std::move(next);
    } else {
      frame.inFlight = std::move(next);
      visit(z);  // invalidates `frame`
    }
  }

  if (!stopped) stats.trailingLimitQueries = counter.limitQueries - gapStart;
  stats.mapQueries = counter.mapQueries;
  stats.limitQueries = counter.limitQueries;
  stats.longestLimit = counter.longestLimit;
  return stats;
}

}  // namespace detail

/// Every fixed point of a decreasing isotone map below config.start, each
/// exactly once, in depth-first order over lexicographically ordered lower
/// covers. The sink may return bool; false stops the run.
template <RelationalLattice L, class Sink>
EnumerationStats enumerateDecreasing(const IsotoneMap<L>& f,
                                     const EnumerationConfig<typename L::Element>& config,
                                     Sink&& sink) {
  return detail::searchFixedPoints(f, Direction::down, config,
                                   [&](const auto& x) { return detail::deliver(sink, x); });
}

/// Mirror image of enumerateDecreasing: fixed points above config.start of an
/// increasing isotone map, walking upper covers.
template <RelationalLattice L, class Sink>
EnumerationStats enumerateIncreasing(const IsotoneMap<L>& f,
                                     const EnumerationConfig<typename L::Element>& config,
                                     Sink&& sink) {
  return detail::searchFixedPoints(f, Direction::up, config,
                                   [&](const auto& x) { return detail::deliver(sink, x); });
}

enum class GeneralRoute { viaDecreasing, viaIncreasing };

/// Relations have polynomially many lower covers; equivalences and
/// quasiorders only polynomially many upper covers.
template <RelationalLattice L>
constexpr GeneralRoute defaultRoute() {
  return L::kind == LatticeKind::relations ? GeneralRoute::viaDecreasing
                                           : GeneralRoute::viaIncreasing;
}

/// Fixed points of an arbitrary isotone map: enumerate f meet id (or f join id)
/// and forward the outputs that f itself fixes. maxOutputs counts forwarded
/// outputs. No delay guarantee carries over.
template <RelationalLattice L, class Sink>
EnumerationStats enumerateGeneral(const IsotoneMap<L>& f, GeneralRoute route,
                                  const EnumerationConfig<typename L::Element>& config,
                                  Sink&& sink) {
  using Element = typename L::Element;
  const IsotoneMap<L> associated =
      route == GeneralRoute::viaDecreasing ? asDecreasing(f) : asIncreasing(f);
  EnumerationConfig<Element> inner = config;
  inner.maxOutputs.reset();
  QueryCounter filter;
  std::size_t forwarded = 0;
  std::size_t suppressed = 0;
  auto stats = detail::searchFixedPoints(
      associated,
      route == GeneralRoute::viaDecreasing ? Direction::down : Direction::up, inner,
      [&](const Element& x) {
        if (!isFixedPoint(f, x, &filter)) {
          ++suppressed;
          return true;
        }
        ++forwarded;
        if (!detail::deliver(sink, x)) return false;
        return !(config.maxOutputs && forwarded >= *config.maxOutputs);
      });
  stats.suppressed = suppressed;
  stats.filterQueries = filter.mapQueries;
  return stats;
}

/// Greatest fixed point of an isotone map: the limit of f meet id from top.
template <RelationalLattice L>
typename L::Element maxFixedPoint(const IsotoneMap<L>& f, QueryCounter* counter = nullptr) {
  return limit(asDecreasing(f), f.lattice().top(), counter);
}

/// Least fixed point: the limit of f join id from bottom.
template <RelationalLattice L>
typename L::Element minFixedPoint(const IsotoneMap<L>& f, QueryCounter* counter = nullptr) {
  return limit(asIncreasing(f), f.lattice().bottom(), counter);
}

/// At least two fixed points iff the extreme ones differ.
template <RelationalLattice L>
bool hasTwoFixedPoints(const IsotoneMap<L>& f, QueryCounter* counter = nullptr) {
  return !(maxFixedPoint(f, counter) == minFixedPoint(f, counter));
}

}  // namespace relfix
