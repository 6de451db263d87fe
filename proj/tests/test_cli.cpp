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


#include <doctest.h>

#include <sstream>

#include "relfix/cli.hpp"

using namespace relfix;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(RunSpec spec, std::string_view input) {
  std::ostringstream out, err;
  const int code = runEnumeration(spec, input, out, err);
  return {code, out.str(), err.str()};
}

RunSpec spec(Mode mode) {
  RunSpec s;
  s.mode = mode;
  return s;
}

std::size_t lineCount(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("parseLts") {
  const Lts loop = parseLts("lts 2 1\n0 a 0\n");
  CHECK(loop.states() == 2);
  CHECK(loop.transitions().size() == 1);
  CHECK(parseLts("lts 2 1\n").transitions().empty());
  CHECK(parseLts("# comment\nlts 3 2\n0 a 1 # trailing\n0 a 1\n1 b 2\n").transitions().size() == 2);
  CHECK_THROWS_WITH_AS(parseLts("lts 2 1\n0 a 5"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parseLts("lts 2 1\n0 a b c"), ParseError);
  CHECK_THROWS_AS(parseLts("lts 2 1\n0 a 0\n0 b 1"), ParseError);
  CHECK_THROWS_AS(parseLts("graph 2\n"), ParseError);
  CHECK_THROWS_AS(parseLts(""), ParseError);
}

TEST_CASE("parseGraph") {
  const Graph c4 = parseGraph("graph 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(c4.edgeCount() == 4);
  CHECK(parseGraph("graph 3\n").edgeCount() == 0);
  CHECK(parseGraph("graph 2\n0 0\n0 1\n1 0\n").edgeCount() == 2);
  CHECK_THROWS_AS(parseGraph("graph 2\n-1 0\n"), ParseError);
  CHECK_THROWS_AS(parseGraph("graph 2\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parseGraph("graph x\n"), ParseError);
}

TEST_CASE("parseCnf") {
  const CnfFormula one = parseCnf("p cnf 1 1\n1 1 1 0\n");
  CHECK(one.clauses().size() == 1);
  CHECK(parseCnf("c hello\np cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n").clauses().size() == 2);
  CHECK(parseCnf("p cnf 2 1\n1 -2\n 2 0\n").clauses().size() == 1);
  CHECK_THROWS_AS(parseCnf("p cnf 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parseCnf("p cnf 1 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parseCnf("p cnf 1 1\n2 2 2 0\n"), ParseError);
  CHECK_THROWS_AS(parseCnf("p cnf 1 2\n1 1 1 0\n"), ParseError);
  CHECK_THROWS_AS(parseCnf("p cnf 1 1\n1 1 1\n"), ParseError);
}

TEST_CASE("spec run examples") {
  auto s = spec(Mode::bisim);
  s.countOnly = true;
  CHECK(run(s, "lts 2 1\n").out == "16\n");
  s = spec(Mode::satR);
  s.countOnly = true;
  CHECK(run(s, "p cnf 1 1\n1 1 1 0\n").out == "3\n");
  s = spec(Mode::regular);
  s.verify = true;
  const auto r = run(s, "graph 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(r.code == kExitOk);
  CHECK(lineCount(r.out) == 7);
}

TEST_CASE("count-only equals the line count of the full run") {
  for (Mode m : {Mode::satQ, Mode::satP}) {
    auto s = spec(m);
    const std::string cnf = "p cnf 2 2\n1 2 2 0\n-1 -2 -2 0\n";
    const auto full = run(s, cnf);
    s.countOnly = true;
    CHECK(run(s, cnf).out == std::to_string(lineCount(full.out)) + "\n");
  }
}

TEST_CASE("mode and direction compatibility") {
  auto s = spec(Mode::bisim);
  s.direction = RunDirection::inc;
  CHECK(run(s, "lts 2 1\n").code == kExitUsage);
  s.direction = RunDirection::general;
  CHECK(run(s, "lts 2 1\n").code == kExitOk);
  s = spec(Mode::satR);
  s.direction = RunDirection::dec;
  CHECK(run(s, "p cnf 1 1\n1 1 1 0\n").code == kExitUsage);
  s = spec(Mode::random);
  CHECK(run(s, "").code == kExitUsage);
}

TEST_CASE("random mode, limits, start and formats") {
  auto s = spec(Mode::random);
  s.lattice = LatticeKind::equivalences;
  s.n = 4;
  s.seed = 5;
  s.verify = true;
  for (RunDirection d : {RunDirection::dec, RunDirection::inc, RunDirection::general}) {
    s.direction = d;
    const auto r = run(s, "");
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("verify: ok") != std::string::npos);
  }
  s.direction = RunDirection::dec;
  s.limit = 2;
  CHECK(lineCount(run(s, "").out) <= 2);
  CHECK(run(s, "").code == kExitOk);
  s.limit.reset();
  s.start = "0 0 1 1";
  CHECK(run(s, "").code == kExitOk);
  s.start = "0 0";
  CHECK(run(s, "").code == kExitUsage);

  s = spec(Mode::bisim);
  s.format = OutputFormat::jsonLines;
  s.stats = true;
  const auto j = run(s, "lts 1 1\n");
  CHECK(j.out.find(R"({"element":"1","index":0})") != std::string::npos);
  CHECK(j.out.find(R"({"stats":{"outputs":2)") != std::string::npos);
  s.format = OutputFormat::text;
  CHECK(run(s, "lts 1 1\n").out.find("# stats outputs=2 ") != std::string::npos);
}

TEST_CASE("verify refuses tables beyond the oracle bound") {
  auto s = spec(Mode::bisim);
  s.verify = true;
  s.countOnly = true;
  CHECK(run(s, "lts 5 1\n0 a 1\n1 a 2\n2 a 3\n3 a 4\n4 a 0\n").code == kExitUsage);
}

TEST_CASE("parse errors map to exit code 1") {
  auto s = spec(Mode::regular);
  const auto r = run(s, "graph 2\n0 7\n");
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("string options") {
  CHECK(parseMode("sat-q") == Mode::satQ);
  CHECK_THROWS_AS(parseMode("foo"), UsageError);
  CHECK(parseDirection("general") == RunDirection::general);
  CHECK(parseFormat("json") == OutputFormat::jsonLines);
  CHECK((parseLatticeKind("Q") == LatticeKind::quasiorders));
  CHECK_THROWS_AS(parseLatticeKind("X"), UsageError);
}
