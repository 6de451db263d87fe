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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "relfix/equivalence.hpp"
#include "relfix/maps.hpp"
#include "relfix/quasiorder.hpp"
#include "relfix/relation.hpp"

namespace relfix {

struct Transition {
  std::size_t source;
  std::size_t label;
  std::size_t target;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Labeled transition system over states 0..n-1 and labels 0..L-1.
class Lts {
 public:
  /// Validates indices and drops duplicate transitions.
  Lts(std::size_t states, std::size_t labels, std::vector<Transition> transitions);

  std::size_t states() const noexcept { return states_; }
  std::size_t labels() const noexcept { return labels_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  /// Targets of `state` under `label`, ascending.
  std::span<const std::size_t> successors(std::size_t state, std::size_t label) const {
    return successors_[state * labels_ + label];
  }

 private:
  std::size_t states_;
  std::size_t labels_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> successors_;
};

/// Undirected graph; loops allowed.
class Graph {
 public:
  Graph(std::size_t vertices, std::span<const std::pair<std::size_t, std::size_t>> edges);

  static Graph cycle(std::size_t n);
  /// K_{1,leaves}, center 0.
  static Graph star(std::size_t leaves);

  std::size_t vertices() const noexcept { return neighbors_.size(); }
  std::span<const std::size_t> neighbors(std::size_t v) const { return neighbors_[v]; }
  std::size_t edgeCount() const noexcept { return edges_; }

 private:
  std::vector<std::vector<std::size_t>> neighbors_;
  std::size_t edges_ = 0;
};

/// 3-CNF formula over variables 1..m. A literal is +v or -v.
class CnfFormula {
 public:
  using Clause = std::array<int, 3>;

  CnfFormula(std::size_t variables, std::vector<Clause> clauses);

  std::size_t variables() const noexcept { return variables_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  /// assignment[v - 1] is the value of variable v.
  bool satisfiedBy(const std::vector<bool>& assignment) const;

 private:
  std::size_t variables_;
  std::vector<Clause> clauses_;
};

/// Keeps (p, q) in R iff every a-step of p is answered by an a-step of q into
/// R and vice versa. Decreasing isotone; fixed points are the bisimulations.
IsotoneMap<RelationLattice> bisimulationMap(const Lts& lts);

/// Keeps x ~ y iff the neighbors of x and of y meet the same classes. The
/// kept pairs are closed back into a partition. Decreasing isotone; fixed
/// points are the regular equivalences.
IsotoneMap<EquivalenceLattice> regularEquivalenceMap(const Graph& graph);

/// Isotone (not decreasing) map on relations over n elements, n*n >= 2m,
/// with at least three fixed points iff the formula is satisfiable. Pair index
/// l - 1 stands for "variable l true", index m + l - 1 for "variable l false".
IsotoneMap<RelationLattice> satGadgetRelations(const CnfFormula& formula, BaseSize n);

/// Decreasing isotone map on quasiorders over m + 1 elements: top stays, two
/// strictly ordered indifference classes stay iff putting variable l true
/// exactly when element l - 1 is in the upper class satisfies the formula,
/// everything else drops to bottom.
IsotoneMap<QuasiorderLattice> satGadgetQuasiorders(const CnfFormula& formula);

/// Decreasing isotone map on equivalences over m + 2 elements: top stays,
/// bipartitions stay iff "element l - 1 shares the class of element m + 1"
/// satisfies the formula, the rest drops to bottom.
IsotoneMap<EquivalenceLattice> satGadgetEquivalences(const CnfFormula& formula);

}  // namespace relfix
