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


// Shared helpers for the unit tests and the acceptance runner: simple maps,
// run collectors and definition-level predicates that do not go through the
// library's application maps.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "relfix/applications.hpp"
#include "relfix/enumerator.hpp"
#include "relfix/oracle.hpp"

namespace relfix::testing {

template <RelationalLattice L>
IsotoneMap<L> identityMap(const L& lattice, MapClass cls = MapClass::decreasing) {
  return IsotoneMap<L>(lattice, [](const typename L::Element& x) { return x; }, cls, "identity");
}

template <RelationalLattice L>
IsotoneMap<L> constantMap(const L& lattice, typename L::Element value, MapClass cls,
                          std::string name) {
  return IsotoneMap<L>(lattice, [value](const typename L::Element&) { return value; }, cls,
                       std::move(name));
}

/// Output of one run in emission order.
template <class Element>
struct Run {
  std::vector<Element> outputs;
  EnumerationStats stats;
};

template <RelationalLattice L>
Run<typename L::Element> collect(const IsotoneMap<L>& f, Direction dir,
                                 EnumerationConfig<typename L::Element> config = {}) {
  Run<typename L::Element> run;
  auto sink = [&](const typename L::Element& x) { run.outputs.push_back(x); };
  run.stats = dir == Direction::down ? enumerateDecreasing(f, config, sink)
                                     : enumerateIncreasing(f, config, sink);
  return run;
}

template <RelationalLattice L>
Run<typename L::Element> collectGeneral(const IsotoneMap<L>& f, GeneralRoute route,
                                        EnumerationConfig<typename L::Element> config = {}) {
  Run<typename L::Element> run;
  run.stats = enumerateGeneral(f, route, config,
                               [&](const typename L::Element& x) { run.outputs.push_back(x); });
  return run;
}

/// Canonical encodings; a duplicate output makes the size differ from the run.
template <RelationalLattice L>
std::set<std::string> encodeAll(const L& lattice, const std::vector<typename L::Element>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(lattice.encode(x));
  return out;
}

/// Bisimulation by definition: whenever p R q, each a-step of p is matched by
/// an a-step of q with related targets, and each a-step of q by one of p.
inline bool isBisimulation(const Lts& lts, const BinaryRelation& r) {
  for (std::size_t p = 0; p < lts.states(); ++p) {
    for (std::size_t q = 0; q < lts.states(); ++q) {
      if (!r.test(p, q)) continue;
      for (const auto& t : lts.transitions()) {
        if (t.source == p) {
          bool matched = false;
          for (const auto& u : lts.transitions())
            if (u.source == q && u.label == t.label && r.test(t.target, u.target)) matched = true;
          if (!matched) return false;
        }
        if (t.source == q) {
          bool matched = false;
          for (const auto& u : lts.transitions())
            if (u.source == p && u.label == t.label && r.test(u.target, t.target)) matched = true;
          if (!matched) return false;
        }
      }
    }
  }
  return true;
}

/// Regular equivalence by definition: for x ~ y, every neighbor of x has an
/// equivalent neighbor of y and vice versa.
inline bool isRegularEquivalence(const Graph& g, const Equivalence& eq) {
  auto covered = [&](std::size_t x, std::size_t y) {
    for (auto u : g.neighbors(x)) {
      bool found = false;
      for (auto v : g.neighbors(y))
        if (eq.related(u, v)) found = true;
      if (!found) return false;
    }
    return true;
  };
  for (std::size_t x = 0; x < g.vertices(); ++x)
    for (std::size_t y = 0; y < g.vertices(); ++y)
      if (eq.related(x, y) && !(covered(x, y) && covered(y, x))) return false;
  return true;
}

/// Every distinct 3-literal clause over m variables, as a sorted literal set
/// padded by repetition. Sizes: 3 for m = 1, 14 for m = 2.
inline std::vector<CnfFormula::Clause> distinctClauses(std::size_t m) {
  std::vector<int> lits;
  for (int v = 1; v <= static_cast<int>(m); ++v) {
    lits.push_back(v);
    lits.push_back(-v);
  }
  std::set<std::set<int>> sets;
  for (int a : lits)
    for (int b : lits)
      for (int c : lits) sets.insert({a, b, c});
  std::vector<CnfFormula::Clause> out;
  for (const auto& s : sets) {
    std::vector<int> v(s.begin(), s.end());
    while (v.size() < 3) v.push_back(v.back());
    out.push_back({v[0], v[1], v[2]});
  }
  return out;
}

/// Satisfiable by trying all 2^m assignments.
inline bool satisfiable(const CnfFormula& f) {
  const std::size_t m = f.variables();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = (mask >> i) & 1u;
    if (f.satisfiedBy(a)) return true;
  }
  return false;
}

}  // namespace relfix::testing
