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
#include <memory>
#include <string>
#include <utility>

#include "relfix/base.hpp"
#include "relfix/cover.hpp"

namespace relfix {

enum class MapClass { isotone, decreasing, increasing };

inline const char* toString(MapClass c) {
  switch (c) {
    case MapClass::isotone: return "iso";
    case MapClass::decreasing: return "dec-iso";
    case MapClass::increasing: return "inc-iso";
  }
  return "?";
}

/// Counts queries made during one enumeration run. Single writer.
struct QueryCounter {
  std::uint64_t mapQueries = 0;
  std::uint64_t limitQueries = 0;
  /// Most map applications spent by a single limit computation.
  std::uint64_t longestLimit = 0;

  void reset() { *this = QueryCounter{}; }
};

/// Black-box isotone map on lattice L with its declared class.
///
/// Isotonicity (and being decreasing / increasing) is the caller's promise;
/// `limit` notices broken promises only when its iteration cap trips.
template <RelationalLattice L>
class IsotoneMap {
 public:
  using Element = typename L::Element;
  using Function = std::function<Element(const Element&)>;

  IsotoneMap(L lattice, Function apply, MapClass declared, std::string name)
      : lattice_(std::move(lattice)),
        apply_(std::make_shared<Function>(std::move(apply))),
        declared_(declared),
        name_(std::move(name)) {}

  const L& lattice() const noexcept { return lattice_; }
  MapClass declaredClass() const noexcept { return declared_; }
  const std::string& name() const noexcept { return name_; }

  Element operator()(const Element& x) const { return (*apply_)(x); }

  Element apply(const Element& x, QueryCounter* counter) const {
    if (counter != nullptr) ++counter->mapQueries;
    return (*apply_)(x);
  }

 private:
  L lattice_;
  std::shared_ptr<const Function> apply_;
  MapClass declared_;
  std::string name_;
};

/// x -> f(x) meet x
template <RelationalLattice L>
IsotoneMap<L> asDecreasing(const IsotoneMap<L>& f) {
  if (f.declaredClass() == MapClass::decreasing) return f;
  return IsotoneMap<L>(
      f.lattice(),
      [f](const typename L::Element& x) { return f.lattice().meet(f(x), x); },
      MapClass::decreasing, "dec(" + f.name() + ")");
}

/// x -> f(x) join x
template <RelationalLattice L>
IsotoneMap<L> asIncreasing(const IsotoneMap<L>& f) {
  if (f.declaredClass() == MapClass::increasing) return f;
  return IsotoneMap<L>(
      f.lattice(),
      [f](const typename L::Element& x) { return f.lattice().join(f(x), x); },
      MapClass::increasing, "inc(" + f.name() + ")");
}

/// Iterates a decreasing (increasing) map from x until it stabilizes, giving
/// the greatest fixed point below x (least fixed point above x).
///
/// A strictly monotone orbit is a chain, so at most height() + 1 applications
/// are needed including the confirming one; needing more means the map is not
/// what it was declared to be and ContractViolation is thrown.
template <RelationalLattice L>
typename L::Element limit(const IsotoneMap<L>& f, typename L::Element x,
                          QueryCounter* counter = nullptr) {
  if (f.declaredClass() == MapClass::isotone)
    throw UsageError("limit needs a map declared dec-iso or inc-iso, got '" + f.name() + "'");
  const std::uint64_t cap = f.lattice().height() + 1;
  if (counter != nullptr) ++counter->limitQueries;
  for (std::uint64_t applied = 1; applied <= cap; ++applied) {
    auto fx = f.apply(x, counter);
    if (fx == x) {
      if (counter != nullptr) counter->longestLimit = std::max(counter->longestLimit, applied);
      return x;
    }
    x = std::move(fx);
  }
  throw ContractViolation("map '" + f.name() + "' declared " + toString(f.declaredClass()) +
                          " did not stabilize within " + std::to_string(cap) +
                          " applications");
}

template <RelationalLattice L>
bool isFixedPoint(const IsotoneMap<L>& f, const typename L::Element& x,
                  QueryCounter* counter = nullptr) {
  return f.apply(x, counter) == x;
}

}  // namespace relfix
