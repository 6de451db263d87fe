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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace relfix {

/// Caller supplied arguments that violate an operation's precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A map broke its declared contract (not isotone, not decreasing, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Number of base elements; elements are named 0..n-1.
class BaseSize {
 public:
  explicit BaseSize(std::size_t n) : n_(n) {
    if (n == 0) throw UsageError("base size must be at least 1");
  }

  std::size_t value() const noexcept { return n_; }
  std::size_t pairs() const noexcept { return n_ * n_; }

  friend bool operator==(BaseSize, BaseSize) = default;

 private:
  std::size_t n_;
};

/// Row-major index of the ordered pair (p, q): p * n + q.
/// This index defines the lexicographic order on all lattices: index 0 is the
/// most significant bit of an element's characteristic vector.
struct PairIndex {
  std::size_t idx = 0;

  static PairIndex of(std::size_t p, std::size_t q, BaseSize n) {
    return PairIndex{p * n.value() + q};
  }
  std::size_t row(BaseSize n) const { return idx / n.value(); }
  std::size_t col(BaseSize n) const { return idx % n.value(); }

  friend auto operator<=>(PairIndex, PairIndex) = default;
};

enum class Direction { down, up };

inline Direction opposite(Direction d) {
  return d == Direction::down ? Direction::up : Direction::down;
}

enum class LatticeKind { equivalences, quasiorders, relations };

inline const char* toString(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::equivalences: return "P";
    case LatticeKind::quasiorders: return "Q";
    case LatticeKind::relations: return "R";
  }
  return "?";
}

inline void requireSameBase(BaseSize a, BaseSize b) {
  if (!(a == b)) {
    throw UsageError("mismatched base sizes " + std::to_string(a.value()) +
                     " and " + std::to_string(b.value()));
  }
}

}  // namespace relfix
