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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "relfix/applications.hpp"

namespace relfix {

enum class Mode { bisim, regular, satR, satQ, satP, random };
enum class RunDirection { dec, inc, general };
enum class OutputFormat { text, jsonLines };

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMismatch = 2, kExitContract = 3 };

Mode parseMode(std::string_view text);
RunDirection parseDirection(std::string_view text);
OutputFormat parseFormat(std::string_view text);
LatticeKind parseLatticeKind(std::string_view text);

struct RunSpec {
  Mode mode = Mode::random;
  /// Input file; "-" reads standard input. Unused in random mode.
  std::string inputPath;
  /// Unset means the mode's natural direction (general for sat-r, dec otherwise).
  std::optional<RunDirection> direction;
  std::optional<std::size_t> limit;
  bool countOnly = false;
  bool stats = false;
  bool verify = false;
  std::optional<std::uint64_t> seed;
  OutputFormat format = OutputFormat::text;
  /// Canonical text of the starting bound.
  std::optional<std::string> start;
  /// Random mode only.
  std::optional<LatticeKind> lattice;
  /// Random mode base size, or the relation base size for sat-r.
  std::optional<std::size_t> n;
};

/// "lts <n> <labels>" followed by "<src> <label> <dst>" lines. States are
/// integers; labels are tokens numbered in order of first appearance.
Lts parseLts(std::string_view text);
/// "graph <n>" followed by "<u> <v>" lines.
Graph parseGraph(std::string_view text);
/// DIMACS "p cnf <m> <k>" with exactly three literals per clause.
CnfFormula parseCnf(std::string_view text);

/// Runs one enumeration on already loaded input text and returns an ExitCode.
/// Diagnostics go to `err`, results to `out`.
int runEnumeration(const RunSpec& spec, std::string_view input, std::ostream& out,
                   std::ostream& err);
/// Same, reading spec.inputPath first (nothing is read in random mode).
int runEnumeration(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace relfix
