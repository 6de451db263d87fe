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


// relfix: enumerate fixed points of the built-in isotone maps.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "relfix/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Enumerate fixed points of isotone maps on equivalences, quasiorders and relations"};
  app.set_version_flag("--version", "relfix 1.0.0");

  std::string mode, direction, format = "text", lattice;
  relfix::RunSpec spec;
  std::size_t limit = 0, n = 0;
  std::uint64_t seed = 0;
  std::string start;

  app.add_option("--mode", mode, "bisim | regular | sat-r | sat-q | sat-p | random")->required();
  app.add_option("--input", spec.inputPath, "input file, '-' for stdin");
  app.add_option("--direction", direction, "dec | inc | general");
  auto* limitOpt = app.add_option("--limit", limit, "stop after this many outputs");
  app.add_flag("--count-only", spec.countOnly, "print only the number of fixed points");
  app.add_flag("--stats", spec.stats, "print a summary line with query counts and bounds");
  app.add_flag("--verify", spec.verify, "cross-check against the brute-force oracle (small n)");
  auto* seedOpt = app.add_option("--seed", seed, "seed for random mode");
  app.add_option("--format", format, "text | json");
  auto* startOpt = app.add_option("--start", start, "bound to start from, canonical text");
  app.add_option("--lattice", lattice, "random mode: P | Q | R");
  auto* nOpt = app.add_option("--n", n, "random mode base size; relation size for sat-r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? relfix::kExitOk : relfix::kExitUsage;
  }

  try {
    spec.mode = relfix::parseMode(mode);
    if (!direction.empty()) spec.direction = relfix::parseDirection(direction);
    spec.format = relfix::parseFormat(format);
    if (!lattice.empty()) spec.lattice = relfix::parseLatticeKind(lattice);
  } catch (const relfix::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return relfix::kExitUsage;
  }
  if (*limitOpt) spec.limit = limit;
  if (*seedOpt) spec.seed = seed;
  if (*startOpt) spec.start = start;
  if (*nOpt) spec.n = n;

  return relfix::runEnumeration(spec, std::cout, std::cerr);
}
