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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "relfix/base.hpp"

namespace relfix {

/// Square boolean matrix over {0..n-1} stored as packed rows.
///
/// Each row occupies its own run of 64-bit words and column q lives at bit
/// position 63 - (q % 64) of word q / 64. With that layout the word sequence
/// compares (as unsigned integers) in exactly the order of the row-major
/// characteristic vector with pair index 0 most significant, so `<=>` is the
/// lexicographic order used throughout the library. Padding bits stay zero.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  explicit BitMatrix(BaseSize n)
      : n_(n.value()),
        rowWords_((n.value() + kWordBits - 1) / kWordBits),
        words_(rowWords_ * n.value(), 0) {}

  static BitMatrix identity(BaseSize n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n.value(); ++i) m.set(i, i);
    return m;
  }

  static BitMatrix full(BaseSize n) {
    BitMatrix m(n);
    for (std::size_t p = 0; p < n.value(); ++p)
      for (std::size_t q = 0; q < n.value(); ++q) m.set(p, q);
    return m;
  }

  BaseSize base() const { return BaseSize(n_); }
  std::size_t dim() const noexcept { return n_; }

  bool test(std::size_t p, std::size_t q) const noexcept {
    return (words_[p * rowWords_ + q / kWordBits] & mask(q)) != 0;
  }
  bool test(PairIndex e) const noexcept { return test(e.idx / n_, e.idx % n_); }

  void set(std::size_t p, std::size_t q, bool value = true) noexcept {
    Word& w = words_[p * rowWords_ + q / kWordBits];
    if (value)
      w |= mask(q);
    else
      w &= ~mask(q);
  }
  void set(PairIndex e, bool value = true) noexcept {
    set(e.idx / n_, e.idx % n_, value);
  }
  void reset(std::size_t p, std::size_t q) noexcept { set(p, q, false); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool none() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  bool subsetOf(const BitMatrix& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  BitMatrix& operator&=(const BitMatrix& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  BitMatrix& operator|=(const BitMatrix& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend BitMatrix operator&(BitMatrix a, const BitMatrix& b) { return a &= b; }
  friend BitMatrix operator|(BitMatrix a, const BitMatrix& b) { return a |= b; }

  /// row(p) |= row(src)
  void orRowInto(std::size_t p, std::size_t src) noexcept {
    for (std::size_t w = 0; w < rowWords_; ++w)
      words_[p * rowWords_ + w] |= words_[src * rowWords_ + w];
  }

  /// Warshall closure, in place.
  void closeTransitively() noexcept {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (test(i, k)) orRowInto(i, k);
  }

  bool isReflexive() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (!test(i, i)) return false;
    return true;
  }

  bool isTransitive() const {
    BitMatrix closed = *this;
    closed.closeTransitively();
    return closed == *this;
  }

  bool isSymmetric() const noexcept {
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = p + 1; q < n_; ++q)
        if (test(p, q) != test(q, p)) return false;
    return true;
  }

  /// Smallest set pair index >= from, or pairs() if none.
  std::size_t nextSet(std::size_t from) const noexcept {
    for (std::size_t e = from; e < n_ * n_; ++e)
      if (test(PairIndex{e})) return e;
    return n_ * n_;
  }

  /// '0'/'1' characters in row-major order.
  std::string toBitString() const {
    std::string s;
    s.reserve(n_ * n_);
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q) s.push_back(test(p, q) ? '1' : '0');
    return s;
  }

  /// Inverse of toBitString; the text must have exactly n*n characters.
  static BitMatrix fromBitString(BaseSize n, std::string_view text);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
  friend std::strong_ordering operator<=>(const BitMatrix& a,
                                          const BitMatrix& b) {
    return a.words_ <=> b.words_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static constexpr Word mask(std::size_t q) noexcept {
    return Word{1} << (kWordBits - 1 - q % kWordBits);
  }

  std::size_t n_;
  std::size_t rowWords_;
  std::vector<Word> words_;
};

inline BitMatrix BitMatrix::fromBitString(BaseSize n, std::string_view text) {
  if (text.size() != n.pairs()) {
    throw UsageError("expected " + std::to_string(n.pairs()) +
                     " characters for a relation on " +
                     std::to_string(n.value()) + " elements, got " +
                     std::to_string(text.size()));
  }
  BitMatrix m(n);
  for (std::size_t e = 0; e < text.size(); ++e) {
    if (text[e] == '1')
      m.set(PairIndex{e});
    else if (text[e] != '0')
      throw UsageError(std::string("invalid relation character '") + text[e] + "'");
  }
  return m;
}

}  // namespace relfix

template <>
struct std::hash<relfix::BitMatrix> {
  std::size_t operator()(const relfix::BitMatrix& m) const noexcept {
    return m.hash();
  }
};
