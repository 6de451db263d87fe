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

#include "relfix/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "relfix/enumerator.hpp"
#include "relfix/oracle.hpp"

namespace relfix {

Mode parseMode(std::string_view text) {
  static const std::map<std::string_view, Mode> modes = {
      {"bisim", Mode::bisim}, {"regular", Mode::regular}, {"sat-r", Mode::satR},
      {"sat-q", Mode::satQ},  {"sat-p", Mode::satP},      {"random", Mode::random}};
  auto it = modes.find(text);
  if (it == modes.end()) throw UsageError("unknown mode '" + std::string(text) + "'");
  return it->second;
}

RunDirection parseDirection(std::string_view text) {
  if (text == "dec") return RunDirection::dec;
  if (text == "inc") return RunDirection::inc;
  if (text == "general") return RunDirection::general;
  throw UsageError("unknown direction '" + std::string(text) + "'");
}

OutputFormat parseFormat(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::jsonLines;
  throw UsageError("unknown format '" + std::string(text) + "'");
}

LatticeKind parseLatticeKind(std::string_view text) {
  if (text == "P") return LatticeKind::equivalences;
  if (text == "Q") return LatticeKind::quasiorders;
  if (text == "R") return LatticeKind::relations;
  throw UsageError("unknown lattice '" + std::string(text) + "' (expected P, Q or R)");
}

namespace {

/// Whitespace-separated tokens of one input line, comments removed.
struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text, std::string_view commentStarts) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    if (commentStarts.find(tokens.front().front()) != std::string_view::npos) continue;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      std::istringstream kept(raw.substr(0, hash));
      tokens.clear();
      for (std::string w; kept >> w;) tokens.push_back(w);
      if (tokens.empty()) continue;
    }
    lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

template <class Int>
Int parseInt(const std::string& token, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
  return value;
}

std::size_t parseIndex(const std::string& token, std::size_t line, std::size_t bound,
                       const char* what) {
  if (!token.empty() && token.front() == '-')
    throw ParseError(line, std::string("negative ") + what + " '" + token + "'");
  const auto v = parseInt<std::size_t>(token, line, what);
  if (v >= bound) {
    throw ParseError(line, std::string(what) + " " + token + " out of range (bound " +
                               std::to_string(bound) + ")");
  }
  return v;
}

std::size_t parseHeaderCount(const Line& header, std::size_t pos, const char* what) {
  if (!header.tokens[pos].empty() && header.tokens[pos].front() == '-')
    throw ParseError(header.number, std::string("negative ") + what);
  const auto v = parseInt<std::size_t>(header.tokens[pos], header.number, what);
  if (v == 0) throw ParseError(header.number, std::string(what) + " must be positive");
  return v;
}

const Line& requireHeader(const std::vector<Line>& lines, std::string_view keyword,
                          std::size_t arity) {
  if (lines.empty()) throw ParseError(1, "missing '" + std::string(keyword) + "' header");
  const Line& h = lines.front();
  if (h.tokens.front() != keyword || h.tokens.size() != arity + 1) {
    throw ParseError(h.number, "expected header '" + std::string(keyword) + "' with " +
                                   std::to_string(arity) + " fields");
  }
  return h;
}

}  // namespace

Lts parseLts(std::string_view text) {
  const auto lines = tokenize(text, "#");
  const Line& header = requireHeader(lines, "lts", 2);
  const std::size_t n = parseHeaderCount(header, 1, "state count");
  const std::size_t labelCount = parseHeaderCount(header, 2, "label count");
  std::map<std::string, std::size_t> labels;
  std::vector<Transition> transitions;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3) throw ParseError(l.number, "expected '<src> <label> <dst>'");
    const std::size_t src = parseIndex(l.tokens[0], l.number, n, "state");
    const std::size_t dst = parseIndex(l.tokens[2], l.number, n, "state");
    auto [it, fresh] = labels.try_emplace(l.tokens[1], labels.size());
    if (fresh && it->second >= labelCount) {
      throw ParseError(l.number, "label '" + l.tokens[1] + "' exceeds the declared " +
                                     std::to_string(labelCount) + " labels");
    }
    transitions.push_back({src, it->second, dst});
  }
  return Lts(n, labelCount, std::move(transitions));
}

Graph parseGraph(std::string_view text) {
  const auto lines = tokenize(text, "#");
  const Line& header = requireHeader(lines, "graph", 1);
  const std::size_t n = parseHeaderCount(header, 1, "vertex count");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected '<u> <v>'");
    edges.emplace_back(parseIndex(l.tokens[0], l.number, n, "vertex"),
                       parseIndex(l.tokens[1], l.number, n, "vertex"));
  }
  return Graph(n, edges);
}

CnfFormula parseCnf(std::string_view text) {
  const auto lines = tokenize(text, "c%");
  if (lines.empty()) throw ParseError(1, "missing 'p cnf' header");
  const Line& h = lines.front();
  if (h.tokens.size() != 4 || h.tokens[0] != "p" || h.tokens[1] != "cnf")
    throw ParseError(h.number, "expected header 'p cnf <variables> <clauses>'");
  const std::size_t m = parseHeaderCount(h, 2, "variable count");
  const auto k = parseInt<std::size_t>(h.tokens[3], h.number, "clause count");

  std::vector<CnfFormula::Clause> clauses;
  std::vector<int> pending;
  std::size_t lastLine = h.number;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    lastLine = lines[i].number;
    for (const auto& tok : lines[i].tokens) {
      const int lit = parseInt<int>(tok, lastLine, "literal");
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ParseError(lastLine, "clause has " + std::to_string(pending.size()) +
                                         " literals, expected exactly 3 (repeat a literal to pad)");
        }
        clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit < 0 ? -static_cast<long long>(lit) : lit) > m)
        throw ParseError(lastLine, "variable in literal " + tok + " exceeds " + std::to_string(m));
      pending.push_back(lit);
    }
  }
  if (!pending.empty()) throw ParseError(lastLine, "last clause is not terminated by 0");
  if (clauses.size() != k) {
    throw ParseError(h.number, "header announces " + std::to_string(k) + " clauses, found " +
                                   std::to_string(clauses.size()));
  }
  return CnfFormula(m, std::move(clauses));
}

namespace {

const char* directionName(RunDirection d) {
  switch (d) {
    case RunDirection::dec: return "dec";
    case RunDirection::inc: return "inc";
    case RunDirection::general: return "general";
  }
  return "?";
}

template <RelationalLattice L>
int runMap(const RunSpec& spec, const IsotoneMap<L>& f, RunDirection dir, std::ostream& out,
           std::ostream& err) {
  using Element = typename L::Element;
  const L& lattice = f.lattice();

  EnumerationConfig<Element> config;
  config.collectStats = false;
  config.maxOutputs = spec.limit;
  if (spec.start) config.start = lattice.decode(*spec.start);

  std::vector<Element> seen;
  std::size_t index = 0;
  auto sink = [&](const Element& x) {
    if (spec.verify) seen.push_back(x);
    if (!spec.countOnly) {
      if (spec.format == OutputFormat::jsonLines) {
        out << nlohmann::json{{"element", lattice.encode(x)}, {"index", index}}.dump();
      } else {
        out << lattice.encode(x);
      }
      out << '\n' << std::flush;
    }
    ++index;
  };

  EnumerationStats stats;
  Direction walk = Direction::down;
  switch (dir) {
    case RunDirection::dec: stats = enumerateDecreasing(f, config, sink); break;
    case RunDirection::inc:
      walk = Direction::up;
      stats = enumerateIncreasing(f, config, sink);
      break;
    case RunDirection::general: {
      const GeneralRoute route = defaultRoute<L>();
      if (route == GeneralRoute::viaIncreasing) walk = Direction::up;
      stats = enumerateGeneral(f, route, config, sink);
      break;
    }
  }

  if (spec.countOnly) out << index << '\n';
  if (spec.stats) {
    nlohmann::ordered_json s = {{"outputs", index},
                                {"max_gap_limit_queries", stats.maxGap},
                                {"max_depth", stats.maxActiveDepth},
                                {"delay_bound", delayBound(lattice, walk)},
                                {"depth_bound", lattice.height() + 1},
                                {"limit_queries", stats.limitQueries},
                                {"map_queries", stats.mapQueries},
                                {"longest_limit", stats.longestLimit}};
    if (dir == RunDirection::general) s["suppressed"] = stats.suppressed;
    if (spec.format == OutputFormat::jsonLines) {
      out << nlohmann::ordered_json{{"stats", s}}.dump() << '\n';
    } else {
      out << "# stats";
      for (auto it = s.begin(); it != s.end(); ++it) out << ' ' << it.key() << '=' << it.value();
      out << '\n';
    }
    out << std::flush;
  }

  if (!spec.verify) return kExitOk;

  const auto table = enumerateAll(lattice);
  std::vector<Element> expected;
  for (const auto& x : bruteForceFixedPoints(f, table)) {
    // the start bounds the search from above (down walks) or below (up walks)
    if (config.start && !(walk == Direction::down ? lattice.leq(x, *config.start)
                                                  : lattice.leq(*config.start, x)))
      continue;
    expected.push_back(x);
  }
  std::set<std::string> got;
  for (const auto& x : seen) {
    if (!got.insert(lattice.encode(x)).second) {
      err << "verify: duplicate output " << lattice.encode(x) << '\n';
      return kExitMismatch;
    }
  }
  std::set<std::string> want;
  for (const auto& x : expected) want.insert(lattice.encode(x));
  const std::size_t wanted = spec.limit ? std::min(*spec.limit, want.size()) : want.size();
  const bool subset = std::includes(want.begin(), want.end(), got.begin(), got.end());
  if (!subset || got.size() != wanted) {
    err << "verify: mismatch, enumerator produced " << got.size() << " fixed points, oracle "
        << want.size() << " (" << directionName(dir) << ")\n";
    for (const auto& s : got)
      if (!want.count(s)) err << "verify: unexpected " << s << '\n';
    if (!spec.limit)
      for (const auto& s : want)
        if (!got.count(s)) err << "verify: missing " << s << '\n';
    return kExitMismatch;
  }
  err << "verify: ok, " << got.size() << " fixed points match the oracle\n";
  return kExitOk;
}

RunDirection resolveDirection(const RunSpec& spec) {
  const bool anyDirection = spec.mode == Mode::random;
  if (spec.mode == Mode::satR) {
    const RunDirection d = spec.direction.value_or(RunDirection::general);
    if (d != RunDirection::general)
      throw UsageError("mode sat-r builds a plain isotone map and needs --direction general");
    return d;
  }
  const RunDirection d = spec.direction.value_or(RunDirection::dec);
  if (!anyDirection && d == RunDirection::inc)
    throw UsageError("this mode builds a decreasing map; use --direction dec or general");
  return d;
}

template <RelationalLattice L>
int runRandom(const RunSpec& spec, const L& lattice, RunDirection dir, std::ostream& out,
              std::ostream& err) {
  const auto table = enumerateAll(lattice);
  const MapClass cls = dir == RunDirection::dec   ? MapClass::decreasing
                       : dir == RunDirection::inc ? MapClass::increasing
                                                  : MapClass::isotone;
  return runMap(spec, randomIsotoneMap(table, spec.seed.value_or(0), cls), dir, out, err);
}

int dispatch(const RunSpec& spec, std::string_view input, std::ostream& out, std::ostream& err) {
  const RunDirection dir = resolveDirection(spec);
  switch (spec.mode) {
    case Mode::bisim: return runMap(spec, bisimulationMap(parseLts(input)), dir, out, err);
    case Mode::regular:
      return runMap(spec, regularEquivalenceMap(parseGraph(input)), dir, out, err);
    case Mode::satR: {
      const CnfFormula formula = parseCnf(input);
      std::size_t n = 1;
      while (n * n < 2 * formula.variables()) ++n;
      if (spec.n) n = *spec.n;
      return runMap(spec, satGadgetRelations(formula, BaseSize(n)), dir, out, err);
    }
    case Mode::satQ: return runMap(spec, satGadgetQuasiorders(parseCnf(input)), dir, out, err);
    case Mode::satP: return runMap(spec, satGadgetEquivalences(parseCnf(input)), dir, out, err);
    case Mode::random: {
      if (!spec.lattice || !spec.n) throw UsageError("random mode needs --lattice and --n");
      const BaseSize n(*spec.n);
      switch (*spec.lattice) {
        case LatticeKind::equivalences:
          return runRandom(spec, EquivalenceLattice(n), dir, out, err);
        case LatticeKind::quasiorders:
          return runRandom(spec, QuasiorderLattice(n), dir, out, err);
        case LatticeKind::relations: return runRandom(spec, RelationLattice(n), dir, out, err);
      }
    }
  }
  throw UsageError("unhandled mode");
}

}  // namespace

int runEnumeration(const RunSpec& spec, std::string_view input, std::ostream& out,
                   std::ostream& err) {
  try {
    return dispatch(spec, input, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitContract;
  }
}

int runEnumeration(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  std::string input;
  if (spec.mode != Mode::random) {
    if (spec.inputPath.empty()) {
      err << "usage error: --input is required for this mode\n";
      return kExitUsage;
    }
    if (spec.inputPath == "-") {
      input.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream file(spec.inputPath, std::ios::binary);
      if (!file) {
        err << "usage error: cannot open '" << spec.inputPath << "'\n";
        return kExitUsage;
      }
      input.assign(std::istreambuf_iterator<char>(file), {});
    }
  }
  return runEnumeration(spec, input, out, err);
}

}  // namespace relfix
