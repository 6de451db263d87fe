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

#include "relfix/equivalence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace relfix {

Equivalence::Equivalence(std::vector<ClassId> canonical) : classOf_(std::move(canonical)) {
  if (classOf_.empty()) throw UsageError("equivalence needs at least one element");
  classCount_ = *std::max_element(classOf_.begin(), classOf_.end()) + std::size_t{1};
}

Equivalence Equivalence::fromLabels(std::span<const std::size_t> labels) {
  std::unordered_map<std::size_t, ClassId> ids;
  std::vector<ClassId> out;
  out.reserve(labels.size());
  for (std::size_t label : labels) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<ClassId>(ids.size()));
    out.push_back(it->second);
  }
  return Equivalence(std::move(out));
}

Equivalence Equivalence::singletons(BaseSize n) {
  std::vector<ClassId> ids(n.value());
  std::iota(ids.begin(), ids.end(), ClassId{0});
  return Equivalence(std::move(ids));
}

Equivalence Equivalence::singleClass(BaseSize n) {
  return Equivalence(std::vector<ClassId>(n.value(), 0));
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> out(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) out[i] = find(i);
    return out;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Equivalence Equivalence::closureOf(const BitMatrix& rel) {
  UnionFind uf(rel.dim());
  for (std::size_t p = 0; p < rel.dim(); ++p)
    for (std::size_t q = 0; q < rel.dim(); ++q)
      if (rel.test(p, q)) uf.unite(p, q);
  auto labels = uf.labels();
  return fromLabels(labels);
}

std::vector<std::vector<std::size_t>> Equivalence::classes() const {
  std::vector<std::vector<std::size_t>> out(classCount_);
  for (std::size_t i = 0; i < classOf_.size(); ++i) out[classOf_[i]].push_back(i);
  return out;
}

BitMatrix Equivalence::relation() const {
  BitMatrix m(base());
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = 0; q < size(); ++q)
      if (related(p, q)) m.set(p, q);
  return m;
}

std::size_t Equivalence::hash() const noexcept {
  std::size_t h = classOf_.size();
  for (ClassId c : classOf_) h = h * 1000003u ^ c;
  return h;
}

bool EquivalenceLattice::leq(const Element& x, const Element& y) const {
  check(x);
  check(y);
  constexpr auto unset = static_cast<Equivalence::ClassId>(-1);
  std::vector<Equivalence::ClassId> target(x.classCount(), unset);
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto& t = target[x.classOf(i)];
    if (t == unset)
      t = y.classOf(i);
    else if (t != y.classOf(i))
      return false;
  }
  return true;
}

EquivalenceLattice::Element EquivalenceLattice::meet(const Element& x, const Element& y) const {
  check(x);
  check(y);
  std::vector<std::size_t> labels(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    labels[i] = std::size_t{x.classOf(i)} * x.size() + y.classOf(i);
  return Equivalence::fromLabels(labels);
}

EquivalenceLattice::Element EquivalenceLattice::join(const Element& x, const Element& y) const {
  check(x);
  check(y);
  UnionFind uf(x.size());
  std::vector<std::size_t> firstX(x.classCount(), x.size()), firstY(y.classCount(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto& fx = firstX[x.classOf(i)];
    auto& fy = firstY[y.classOf(i)];
    if (fx == x.size()) fx = i;
    if (fy == y.size()) fy = i;
    uf.unite(i, fx);
    uf.unite(i, fy);
  }
  auto labels = uf.labels();
  return Equivalence::fromLabels(labels);
}

std::strong_ordering EquivalenceLattice::lexCompare(const Element& x, const Element& y) const {
  check(x);
  check(y);
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t q = 0; q < x.size(); ++q) {
      const bool a = x.related(p, q);
      const bool b = y.related(p, q);
      if (a != b) return a ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

namespace {

// Splits and merges are generated directly in ascending lexicographic order.
// Class ids follow the smallest members, so for merges the larger (a, b)
// keeps more early pairs absent and comes first. A split of class c keeps its
// smallest member in part A; `rank` bit s-1-j tells whether member j joins A,
// so higher ranks keep more early pairs and sort later.

EquivalenceLattice::Cover makeMerge(const std::vector<std::size_t>& labels, std::size_t a,
                                    std::size_t b) {
  std::vector<std::size_t> merged = labels;
  for (auto& l : merged)
    if (l == b) l = a;
  return {CoverKind::mergeClasses, {a, b}, Equivalence::fromLabels(merged)};
}

EquivalenceLattice::Cover makeSplit(const std::vector<std::size_t>& labels,
                                    const std::vector<std::size_t>& members, std::size_t c,
                                    std::uint64_t rank) {
  const std::size_t s = members.size();
  std::vector<std::size_t> split = labels;
  std::uint64_t partA = 1;
  for (std::size_t j = 1; j < s; ++j) {
    if ((rank >> (s - 1 - j)) & 1u)
      partA |= std::uint64_t{1} << j;
    else
      split[members[j]] = labels.size();  // fresh label for part B
  }
  return {CoverKind::splitClass, {c, partA}, Equivalence::fromLabels(split)};
}

std::uint64_t rankOf(std::uint64_t partA, std::size_t s) {
  std::uint64_t rank = 0;
  for (std::size_t j = 1; j < s; ++j)
    if ((partA >> j) & 1u) rank |= std::uint64_t{1} << (s - 1 - j);
  return rank;
}

}  // namespace

void EquivalenceLattice::forEachCover(const Element& x, Direction dir,
                                      const std::function<void(Cover&&)>& visit) const {
  for (auto c = nextCover(x, dir, nullptr); c; c = nextCover(x, dir, &*c)) visit(std::move(*c));
}

std::vector<EquivalenceLattice::Cover> EquivalenceLattice::covers(const Element& x,
                                                                 Direction dir) const {
  std::vector<Cover> out;
  forEachCover(x, dir, [&](Cover&& c) { out.push_back(std::move(c)); });
  return out;
}

std::optional<EquivalenceLattice::Cover> EquivalenceLattice::nextCover(const Element& x,
                                                                       Direction dir,
                                                                       const Cover* after) const {
  check(x);
  const std::vector<std::size_t> labels(x.classIds().begin(), x.classIds().end());
  const std::size_t k = x.classCount();
  if (dir == Direction::up) {
    if (k < 2) return std::nullopt;
    std::size_t a = k - 2, b = k - 1;
    if (after != nullptr) {
      a = after->payload.first;
      b = after->payload.second;
      if (b > a + 1) {
        --b;
      } else if (a > 0) {
        --a;
        b = k - 1;
      } else {
        return std::nullopt;
      }
    }
    return makeMerge(labels, a, b);
  }

  const auto classes = x.classes();
  std::size_t c = 0;
  std::uint64_t rank = 0;
  if (after != nullptr) {
    c = after->payload.first;
    rank = rankOf(after->payload.second, classes[c].size()) + 1;
  }
  for (; c < classes.size(); ++c, rank = 0) {
    const std::size_t s = classes[c].size();
    if (s < 2) continue;
    if (s > kMaxSplitClass)
      throw UsageError("class of size " + std::to_string(s) + " is too large to split");
    // the all-ones rank would leave part B empty
    if (rank + 1 < (std::uint64_t{1} << (s - 1))) return makeSplit(labels, classes[c], c, rank);
  }
  return std::nullopt;
}

bool EquivalenceLattice::entryBlocks(const Element& u, const Cover& v, const Element& z,
                                     Direction dir) const {
  if (dir == Direction::down) return genericEntryBlocks(*this, u, v, z, dir);
  if (!leq(u, z)) return false;
  const std::size_t n = u.size();
  std::vector<std::size_t> minElem(u.classCount(), n);
  for (std::size_t i = 0; i < n; ++i)
    if (minElem[u.classOf(i)] == n) minElem[u.classOf(i)] = i;
  const std::size_t bound = minElem[v.payload.first] * n + minElem[v.payload.second];
  for (std::size_t a = 0; a < minElem.size(); ++a) {
    for (std::size_t b = a + 1; b < minElem.size(); ++b) {
      if (minElem[a] * n + minElem[b] < bound) continue;  // lexicographically after v
      if (z.related(minElem[a], minElem[b])) return true;
    }
  }
  return false;
}

std::uint64_t EquivalenceLattice::maxCovers(Direction dir) const {
  const std::uint64_t n = n_.value();
  if (dir == Direction::up) return n * (n - 1) / 2;
  return (std::uint64_t{1} << (n - 1)) - 1;
}

std::size_t EquivalenceLattice::pairCount(const Element& x) const {
  std::vector<std::size_t> sizes(x.classCount(), 0);
  for (auto c : x.classIds()) ++sizes[c];
  std::size_t total = 0;
  for (auto s : sizes) total += s * s;
  return total;
}

std::string EquivalenceLattice::encode(const Element& x) const {
  check(x);
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(x.classOf(i));
  }
  return out;
}

EquivalenceLattice::Element EquivalenceLattice::decode(std::string_view text) const {
  std::vector<std::size_t> labels;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || (ptr != text.data() + text.size() && *ptr != ' ' && *ptr != '\t'))
      throw UsageError("invalid class id in equivalence '" + std::string(text) + "'");
    labels.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (labels.size() != n_.value()) {
    throw UsageError("expected " + std::to_string(n_.value()) + " class ids, got " +
                     std::to_string(labels.size()));
  }
  return Equivalence::fromLabels(labels);
}

}  // namespace relfix
