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

#include "relfix/applications.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <string>

namespace relfix {

Lts::Lts(std::size_t states, std::size_t labels, std::vector<Transition> transitions)
    : states_(states), labels_(labels), transitions_(std::move(transitions)) {
  if (states_ == 0) throw UsageError("LTS needs at least one state");
  for (const auto& t : transitions_) {
    if (t.source >= states_ || t.target >= states_)
      throw UsageError("transition state out of range");
    if (t.label >= labels_) throw UsageError("transition label out of range");
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  successors_.resize(states_ * labels_);
  for (const auto& t : transitions_) successors_[t.source * labels_ + t.label].push_back(t.target);
}

Graph::Graph(std::size_t vertices, std::span<const std::pair<std::size_t, std::size_t>> edges)
    : neighbors_(vertices) {
  if (vertices == 0) throw UsageError("graph needs at least one vertex");
  for (auto [u, v] : edges) {
    if (u >= vertices || v >= vertices) throw UsageError("edge endpoint out of range");
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& nb : neighbors_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  for (std::size_t u = 0; u < vertices; ++u)
    for (auto v : neighbors_[u])
      if (u <= v) ++edges_;
}

Graph Graph::cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

CnfFormula::CnfFormula(std::size_t variables, std::vector<Clause> clauses)
    : variables_(variables), clauses_(std::move(clauses)) {
  if (variables_ == 0) throw UsageError("formula needs at least one variable");
  for (const auto& c : clauses_) {
    for (int lit : c) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > variables_)
        throw UsageError("literal " + std::to_string(lit) + " out of range");
    }
  }
}

bool CnfFormula::satisfiedBy(const std::vector<bool>& assignment) const {
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](int lit) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
      return lit > 0 ? value : !value;
    });
  });
}

IsotoneMap<RelationLattice> bisimulationMap(const Lts& lts) {
  auto sys = std::make_shared<const Lts>(lts);
  const RelationLattice lattice(BaseSize(lts.states()));
  return IsotoneMap<RelationLattice>(
      lattice,
      [sys](const BinaryRelation& r) {
        // every a-step from `from` is matched by some a-step from `to`,
        // with targets related as (from', to') or (to', from') per `forward`
        auto answered = [&](std::size_t from, std::size_t to, bool forward) {
          for (std::size_t a = 0; a < sys->labels(); ++a) {
            const auto mine = sys->successors(from, a);
            const auto theirs = sys->successors(to, a);
            for (auto t1 : mine) {
              const bool ok = std::any_of(theirs.begin(), theirs.end(), [&](std::size_t t2) {
                return forward ? r.test(t1, t2) : r.test(t2, t1);
              });
              if (!ok) return false;
            }
          }
          return true;
        };
        BinaryRelation out(r.base());
        for (std::size_t p = 0; p < r.dim(); ++p)
          for (std::size_t q = 0; q < r.dim(); ++q)
            if (r.test(p, q) && answered(p, q, true) && answered(q, p, false)) out.set(p, q);
        return out;
      },
      MapClass::decreasing, "bisimulation");
}

IsotoneMap<EquivalenceLattice> regularEquivalenceMap(const Graph& graph) {
  auto g = std::make_shared<const Graph>(graph);
  const EquivalenceLattice lattice(BaseSize(graph.vertices()));
  return IsotoneMap<EquivalenceLattice>(
      lattice,
      [g](const Equivalence& eq) {
        // x and y survive together iff they share a class and their
        // neighborhoods meet the same set of classes. That relation is
        // already transitive, so grouping by signature is its closure.
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> labels(eq.size());
        for (std::size_t v = 0; v < eq.size(); ++v) {
          std::vector<std::size_t> sig;
          sig.reserve(g->neighbors(v).size() + 1);
          for (auto u : g->neighbors(v)) sig.push_back(eq.classOf(u));
          std::sort(sig.begin(), sig.end());
          sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
          sig.insert(sig.begin(), eq.classOf(v));
          labels[v] = ids.try_emplace(std::move(sig), ids.size()).first->second;
        }
        return Equivalence::fromLabels(labels);
      },
      MapClass::decreasing, "regular-equivalence");
}

IsotoneMap<RelationLattice> satGadgetRelations(const CnfFormula& formula, BaseSize n) {
  const std::size_t m = formula.variables();
  if (n.pairs() < 2 * m) {
    throw UsageError("relation gadget for " + std::to_string(m) + " variables needs n*n >= " +
                     std::to_string(2 * m) + ", got n = " + std::to_string(n.value()));
  }
  auto cnf = std::make_shared<const CnfFormula>(formula);
  const RelationLattice lattice(n);
  return IsotoneMap<RelationLattice>(
      lattice,
      [cnf, lattice, m](const BinaryRelation& r) {
        if (r.nextSet(2 * m) < r.dim() * r.dim()) return lattice.top();
        bool someNeither = false;
        std::vector<bool> assignment(m);
        for (std::size_t l = 0; l < m; ++l) {
          const bool pos = r.test(PairIndex{l});
          const bool neg = r.test(PairIndex{l + m});
          if (pos && neg) return lattice.top();
          if (!pos && !neg) someNeither = true;
          assignment[l] = pos;
        }
        if (someNeither) return lattice.bottom();
        return cnf->satisfiedBy(assignment) ? r : lattice.bottom();
      },
      MapClass::isotone, "sat-relations");
}

IsotoneMap<QuasiorderLattice> satGadgetQuasiorders(const CnfFormula& formula) {
  const std::size_t m = formula.variables();
  auto cnf = std::make_shared<const CnfFormula>(formula);
  const QuasiorderLattice lattice{BaseSize(m + 1)};
  return IsotoneMap<QuasiorderLattice>(
      lattice,
      [cnf, lattice, m](const Quasiorder& q) {
        if (q == lattice.top()) return q;
        const IndifferenceQuotient quo(q);
        if (quo.classCount() != 2) return lattice.bottom();
        std::size_t upper;
        if (quo.below(0, 1))
          upper = 1;
        else if (quo.below(1, 0))
          upper = 0;
        else
          return lattice.bottom();
        std::vector<bool> assignment(m);
        for (std::size_t l = 0; l < m; ++l) assignment[l] = quo.classOf[l] == upper;
        return cnf->satisfiedBy(assignment) ? q : lattice.bottom();
      },
      MapClass::decreasing, "sat-quasiorders");
}

IsotoneMap<EquivalenceLattice> satGadgetEquivalences(const CnfFormula& formula) {
  const std::size_t m = formula.variables();
  auto cnf = std::make_shared<const CnfFormula>(formula);
  const EquivalenceLattice lattice{BaseSize(m + 2)};
  return IsotoneMap<EquivalenceLattice>(
      lattice,
      [cnf, lattice, m](const Equivalence& eq) {
        if (eq.classCount() == 1) return eq;
        if (eq.classCount() >= 3) return lattice.bottom();
        std::vector<bool> assignment(m);
        for (std::size_t l = 0; l < m; ++l) assignment[l] = eq.related(l, m + 1);
        return cnf->satisfiedBy(assignment) ? eq : lattice.bottom();
      },
      MapClass::decreasing, "sat-equivalences");
}

}  // namespace relfix
