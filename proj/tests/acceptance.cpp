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


// Acceptance runner: checks the ten acceptance criteria and prints one
// [PASS]/[FAIL] line per criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

#ifndef RELFIX_CLI_PATH
#error "RELFIX_CLI_PATH must name the relfix executable"
#endif

using namespace relfix;
using relfix::testing::encodeAll;

namespace {

// Pinned run sizes and limits.
constexpr std::uint64_t kMapsPerClass = 100;
constexpr std::uint64_t kMapsPerClassR3 = 10;
constexpr double kRuntimeTargetSeconds = 60.0;
constexpr std::size_t kRandomLtsCount = 20;

struct Criterion {
  bool pass = true;
  std::uint64_t checks = 0;
  std::string firstFailure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      firstFailure = what;
    }
  }
  void fail(const std::string& what) { check(false, what); }
};

struct Ledger {
  Criterion c[11];
  // worst observed values, reported in the detail column
  std::uint64_t worstGapSlack = 0, worstGap = 0, worstGapBound = 0;
  std::uint64_t worstDepth = 0, worstDepthBound = 0;
  std::uint64_t worstLimit = 0, worstLimitBound = 0;
  std::uint64_t runs1 = 0;
  double seconds1 = 0;
};

std::string where(const char* kind, std::size_t n, std::uint64_t seed, const char* cls) {
  return std::string(kind) + "(" + std::to_string(n) + ") seed " + std::to_string(seed) + " " +
         cls;
}

template <RelationalLattice L>
void noteLimit(Ledger& led, const L& lat, const EnumerationStats& s, const std::string& ctx) {
  led.worstLimit = std::max(led.worstLimit, s.longestLimit);
  led.worstLimitBound = std::max(led.worstLimitBound, lat.height() + 1);
  led.c[5].check(s.longestLimit <= lat.height() + 1, ctx + ": limit used " +
                                                         std::to_string(s.longestLimit) +
                                                         " applications");
}

/// Criteria 1, 3, 4, 5 and 9 for one random map.
template <RelationalLattice L>
void runRandomMap(Ledger& led, const SmallLatticeTable<L>& table, std::uint64_t seed,
                  MapClass cls) {
  using Element = typename L::Element;
  const L& lat = table.lattice();
  const Direction dir = cls == MapClass::decreasing ? Direction::down : Direction::up;
  const std::string ctx = where(toString(L::kind), lat.base().value(), seed, toString(cls));
  try {
    const auto f = randomIsotoneMap(table, seed, cls);
    const auto expected = bruteForceFixedPoints(f, table);
    std::vector<Element> outputs;
    EnumerationConfig<Element> config;
    auto sink = [&](const Element& x) { outputs.push_back(x); };
    const auto stats = dir == Direction::down ? enumerateDecreasing(f, config, sink)
                                              : enumerateIncreasing(f, config, sink);
    ++led.runs1;

    const auto got = encodeAll(lat, outputs);
    led.c[1].check(got.size() == outputs.size(), ctx + ": duplicate output");
    led.c[1].check(got == encodeAll(lat, expected), ctx + ": output set differs from oracle");

    const std::uint64_t bound = delayBound(lat, dir);
    for (auto gap : stats.limitQueriesPerGap) {
      if (gap > led.worstGap || (gap == led.worstGap && bound < led.worstGapBound)) {
        led.worstGap = gap;
        led.worstGapBound = bound;
      }
      led.c[3].check(gap <= bound, ctx + ": gap of " + std::to_string(gap) + " > bound " +
                                       std::to_string(bound));
    }
    led.worstDepth = std::max<std::uint64_t>(led.worstDepth, stats.maxActiveDepth);
    led.worstDepthBound = std::max<std::uint64_t>(led.worstDepthBound, lat.height() + 1);
    led.c[4].check(stats.maxActiveDepth <= lat.height() + 1,
                   ctx + ": depth " + std::to_string(stats.maxActiveDepth));
    noteLimit(led, lat, stats, ctx);

    // extremes: the fixed-point set has a greatest and a least element
    QueryCounter hiCount, loCount;
    const Element hi = maxFixedPoint(f, &hiCount);
    const Element lo = minFixedPoint(f, &loCount);
    bool hiOk = f(hi) == hi, loOk = f(lo) == lo;
    for (const auto& x : expected) {
      hiOk = hiOk && lat.leq(x, hi);
      loOk = loOk && lat.leq(lo, x);
    }
    led.c[9].check(hiOk, ctx + ": maxFixedPoint is not the maximum");
    led.c[9].check(loOk, ctx + ": minFixedPoint is not the minimum");
    led.c[9].check(hiCount.mapQueries <= lat.height() + 1 && loCount.mapQueries <= lat.height() + 1,
                   ctx + ": extreme search used too many applications");
  } catch (const ContractViolation& e) {
    led.c[5].fail(ctx + ": " + e.what());
    led.c[1].fail(ctx + ": run aborted");
  }
}

template <RelationalLattice L>
void criterionOneFamily(Ledger& led, const L& lat, std::uint64_t maps) {
  const auto table = enumerateAll(lat);
  for (std::uint64_t seed = 0; seed < maps; ++seed) {
    runRandomMap(led, table, seed, MapClass::decreasing);
    runRandomMap(led, table, seed, MapClass::increasing);
  }
}

void criteriaOneThreeFourNine(Ledger& led) {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 4; ++n)
    criterionOneFamily(led, EquivalenceLattice(BaseSize(n)), kMapsPerClass);
  for (std::size_t n = 1; n <= 3; ++n)
    criterionOneFamily(led, QuasiorderLattice(BaseSize(n)), kMapsPerClass);
  for (std::size_t n = 1; n <= 2; ++n)
    criterionOneFamily(led, RelationLattice(BaseSize(n)), kMapsPerClass);
  criterionOneFamily(led, RelationLattice(BaseSize(3)), kMapsPerClassR3);
  led.seconds1 =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  led.c[1].check(led.seconds1 < kRuntimeTargetSeconds,
                 "runtime " + std::to_string(led.seconds1) + " s exceeds target");
}

template <RelationalLattice L>
void criterionTwoLattice(Criterion& c, const L& lat) {
  const auto table = enumerateAll(lat);
  for (Direction dir : {Direction::down, Direction::up}) {
    for (const auto& x : table.elements()) {
      std::vector<typename L::Element> streamed;
      for (auto w = lat.nextCover(x, dir, nullptr); w; w = lat.nextCover(x, dir, &*w))
        streamed.push_back(w->element);
      c.check(streamed == bruteForceCovers(x, table, dir),
              std::string(toString(L::kind)) + "(" + std::to_string(lat.base().value()) +
                  ") element " + lat.encode(x) + ": cover stream differs from oracle");
    }
  }
}

void criterionTwo(Ledger& led) {
  Criterion& c = led.c[2];
  for (std::size_t n = 1; n <= 4; ++n) criterionTwoLattice(c, EquivalenceLattice(BaseSize(n)));
  for (std::size_t n = 1; n <= 3; ++n) criterionTwoLattice(c, QuasiorderLattice(BaseSize(n)));
  for (std::size_t n = 1; n <= 3; ++n) criterionTwoLattice(c, RelationLattice(BaseSize(n)));
  for (std::size_t n = 1; n <= 4; ++n) {
    const QuasiorderLattice q{BaseSize(n)};
    const auto table = enumerateAll(q);
    const std::size_t down = bruteForceCovers(q.top(), table, Direction::down).size();
    const std::size_t up = bruteForceCovers(q.bottom(), table, Direction::up).size();
    c.check(down == (std::size_t{1} << n) - 2 && q.covers(q.top(), Direction::down).size() == down,
            "Q(" + std::to_string(n) + ") top has " + std::to_string(down) + " lower covers");
    c.check(up == n * (n - 1) && q.covers(q.bottom(), Direction::up).size() == up,
            "Q(" + std::to_string(n) + ") bottom has " + std::to_string(up) + " upper covers");
  }
}

Lts randomLts(std::size_t n, std::size_t labels, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(0.25);
  std::vector<Transition> ts;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t a = 0; a < labels; ++a)
      for (std::size_t t = 0; t < n; ++t)
        if (edge(rng)) ts.push_back({s, a, t});
  return Lts(n, labels, ts);
}

template <RelationalLattice L>
std::vector<typename L::Element> enumerateDown(Ledger& led, const IsotoneMap<L>& f,
                                               const std::string& ctx, Criterion& owner) {
  std::vector<typename L::Element> out;
  try {
    const auto stats = enumerateDecreasing(f, {}, [&](const auto& x) { out.push_back(x); });
    noteLimit(led, f.lattice(), stats, ctx);
  } catch (const ContractViolation& e) {
    led.c[5].fail(ctx + ": " + e.what());
    owner.fail(ctx + ": run aborted");
  }
  return out;
}

void criterionSix(Ledger& led) {
  Criterion& c = led.c[6];
  {
    const Lts empty(2, 1, {});
    const auto out = enumerateDown(led, bisimulationMap(empty), "empty LTS", c);
    c.check(out.size() == 16 && encodeAll(RelationLattice(BaseSize(2)), out).size() == 16,
            "empty-transition LTS gave " + std::to_string(out.size()) + " bisimulations");
  }
  for (std::uint64_t seed = 0; seed < kRandomLtsCount; ++seed) {
    const Lts lts = randomLts(3, 2, seed);
    const auto f = bisimulationMap(lts);
    const auto table = enumerateAll(f.lattice());
    std::set<std::string> direct;
    for (const auto& x : table.elements())
      if (testing::isBisimulation(lts, x)) direct.insert(f.lattice().encode(x));
    const std::string ctx = "LTS seed " + std::to_string(seed);
    const auto out = enumerateDown(led, f, ctx, c);
    const auto got = encodeAll(f.lattice(), out);
    c.check(table.size() == 512, "relation table on 3 states is not 512");
    c.check(got.size() == out.size() && got == direct, ctx + ": set differs from predicate");
  }
}

void criterionSeven(Ledger& led) {
  Criterion& c = led.c[7];
  const std::vector<std::pair<std::string, Graph>> graphs = {{"C4", Graph::cycle(4)},
                                                             {"C5", Graph::cycle(5)},
                                                             {"C6", Graph::cycle(6)},
                                                             {"K1,3", Graph::star(3)}};
  for (const auto& [name, g] : graphs) {
    const auto f = regularEquivalenceMap(g);
    const EquivalenceLattice& p = f.lattice();
    const auto table = enumerateAll(p);
    std::set<std::string> direct;
    for (const auto& x : table.elements())
      if (testing::isRegularEquivalence(g, x)) direct.insert(p.encode(x));
    const auto out = enumerateDown(led, f, name, c);
    const auto got = encodeAll(p, out);
    c.check(got.size() == out.size() && got == direct, name + ": set differs from predicate");
    c.check(got.count(p.encode(p.bottom())) == 1, name + ": singletons missing");
    c.check(got.count(p.encode(p.top())) == 1, name + ": single class missing");
  }
}

void criterionEight(Ledger& led) {
  Criterion& c = led.c[8];
  for (std::size_t m = 1; m <= 2; ++m) {
    const auto clauses = testing::distinctClauses(m);
    const RelationLattice r{BaseSize(2)};
    const auto rt = enumerateAll(r);
    const auto qt = enumerateAll(QuasiorderLattice(BaseSize(m + 1)));
    const auto pt = enumerateAll(EquivalenceLattice(BaseSize(m + 2)));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << clauses.size()); ++mask) {
      std::vector<CnfFormula::Clause> chosen;
      for (std::size_t i = 0; i < clauses.size(); ++i)
        if ((mask >> i) & 1u) chosen.push_back(clauses[i]);
      const CnfFormula formula(m, chosen);
      const bool sat = testing::satisfiable(formula);
      const std::string ctx = "m=" + std::to_string(m) + " clause mask " + std::to_string(mask);

      const auto fr = satGadgetRelations(formula, BaseSize(2));
      const auto fq = satGadgetQuasiorders(formula);
      const auto fp = satGadgetEquivalences(formula);
      c.check((bruteForceFixedPoints(fr, rt).size() >= 3) == sat, ctx + ": R brute force");
      c.check((bruteForceFixedPoints(fq, qt).size() >= 3) == sat, ctx + ": Q brute force");
      c.check((bruteForceFixedPoints(fp, pt).size() >= 3) == sat, ctx + ": P brute force");

      try {
        std::size_t count = 0;
        auto stats = enumerateGeneral(fr, GeneralRoute::viaDecreasing, {},
                                      [&](const BinaryRelation&) { ++count; });
        noteLimit(led, r, stats, ctx + " R");
        c.check((count >= 3) == sat, ctx + ": R enumerator");
      } catch (const ContractViolation& e) {
        led.c[5].fail(ctx + ": " + e.what());
        c.fail(ctx + ": R run aborted");
      }
      c.check((enumerateDown(led, fq, ctx + " Q", c).size() >= 3) == sat, ctx + ": Q enumerator");
      c.check((enumerateDown(led, fp, ctx + " P", c).size() >= 3) == sat, ctx + ": P enumerator");
    }
  }
}

std::string runCli(const std::string& args, int& status) {
  const std::string command = std::string(RELFIX_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

void criterionTen(Ledger& led) {
  Criterion& c = led.c[10];
  const std::string dir = std::string(RELFIX_WORK_DIR);
  const std::string lts = dir + "/acceptance_lts.txt";
  const std::string graph = dir + "/acceptance_graph.txt";
  const std::string cnf = dir + "/acceptance_cnf.txt";
  std::ofstream(lts) << "lts 3 2\n0 a 1\n1 b 2\n2 a 0\n1 a 1\n";
  std::ofstream(graph) << "graph 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
  std::ofstream(cnf) << "p cnf 2 2\n1 -2 -2 0\n-1 2 2 0\n";
  const std::vector<std::string> runs = {
      "--mode bisim --input " + lts + " --stats",
      "--mode regular --input " + graph + " --format json --stats",
      "--mode sat-r --input " + cnf,
      "--mode sat-q --input " + cnf + " --direction general",
      "--mode sat-p --input " + cnf + " --stats",
      "--mode random --lattice Q --n 3 --seed 42 --direction inc --stats",
      "--mode random --lattice P --n 5 --seed 7 --direction general --format json",
      "--mode random --lattice R --n 2 --seed 3 --direction dec --limit 5"};
  for (const auto& args : runs) {
    int s1 = 0, s2 = 0;
    const std::string a = runCli(args, s1);
    const std::string b = runCli(args, s2);
    c.check(s1 == 0 && s2 == 0, "'" + args + "' exited nonzero");
    c.check(!a.empty(), "'" + args + "' printed nothing");
    c.check(a == b, "'" + args + "' produced different output");
  }
}

void report(int id, const char* title, const Criterion& c, const std::string& detail) {
  std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << ": " << c.checks
            << " checks";
  if (!detail.empty()) std::cout << "; " << detail;
  if (!c.pass) std::cout << "; first failure: " << c.firstFailure;
  std::cout << '\n';
}

}  // namespace

int main() {
  Ledger led;
  criteriaOneThreeFourNine(led);
  criterionTwo(led);
  criterionSix(led);
  criterionSeven(led);
  criterionEight(led);
  criterionTen(led);

  std::ostringstream t;
  t.precision(2);
  t << std::fixed << led.runs1 << " runs in " << led.seconds1 << " s";
  report(1, "oracle equivalence", led.c[1], t.str());
  report(2, "cover soundness", led.c[2], "");
  report(3, "delay bound", led.c[3],
         "largest gap " + std::to_string(led.worstGap) + " (bound there " +
             std::to_string(led.worstGapBound) + ")");
  report(4, "space bound", led.c[4],
         "deepest path " + std::to_string(led.worstDepth) + ", largest bound " +
             std::to_string(led.worstDepthBound));
  report(5, "limit bound", led.c[5],
         "longest limit " + std::to_string(led.worstLimit) + " applications");
  report(6, "bisimulation", led.c[6], "");
  report(7, "regular equivalence", led.c[7], "");
  report(8, "SAT gadgets", led.c[8], "");
  report(9, "extremes", led.c[9], "");
  report(10, "determinism", led.c[10], "");

  bool all = true;
  for (int i = 1; i <= 10; ++i) all = all && led.c[i].pass;
  std::cout << (all ? "all 10 criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
