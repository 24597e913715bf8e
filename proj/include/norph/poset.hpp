/*
 *   Copyright 2026 The norph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "norph/common.hpp"

namespace norph {

/// Closure direction of a subset: upward keeps everything above its
/// members, downward everything below.
enum class Direction : std::uint8_t { up, down };

inline Direction flip(Direction d) {
  return d == Direction::up ? Direction::down : Direction::up;
}

inline const char* to_string(Direction d) {
  return d == Direction::up ? "up" : "down";
}

/// A finite preorder: named elements plus a reflexive-transitive Boolean
/// order matrix. Cycles are permitted; antisymmetry is never assumed.
/// Values are immutable after construction.
class Preorder {
 public:
  Preorder() = default;

  /// Builds the reflexive-transitive closure of the given cover pairs.
  static Preorder from_hasse(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
    Preorder p;
    p.elements_ = std::move(elements);
    p.build_index();
    const std::size_t n = p.size();
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
    for (const auto& [lo, hi] : covers) {
      p.leq_[p.index_of(lo) * n + p.index_of(hi)] = 1;
    }
    p.transitive_close();
    return p;
  }

  /// Wraps an explicit order matrix; rejects matrices that are not
  /// reflexive and transitive.
  static Preorder from_leq(std::vector<std::string> elements, std::vector<std::uint8_t> leq) {
    Preorder p;
    p.elements_ = std::move(elements);
    p.build_index();
    const std::size_t n = p.size();
    if (leq.size() != n * n) throw Error("order matrix size does not match element count");
    p.leq_ = std::move(leq);
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq(i, i)) throw Error("order not reflexive at '" + p.element(i) + "'");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!p.leq(i, j)) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (p.leq(j, k) && !p.leq(i, k)) {
            throw Error("order not transitive: '" + p.element(i) + "' <= '" + p.element(j) +
                        "' <= '" + p.element(k) + "' but the outer pair is unrelated");
          }
        }
      }
    }
    return p;
  }

  /// The one-element space.
  static Preorder unit() { return from_hasse({"*"}, {}); }

  /// The two-element chain 0 <= 1.
  static Preorder bool2() { return from_hasse({"0", "1"}, {{"0", "1"}}); }

  static Preorder chain(std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) covers.push_back({names[i], names[i + 1]});
    return from_hasse(std::move(names), covers);
  }

  static Preorder antichain(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return from_hasse(std::move(names), {});
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const& { return elements_; }
  std::vector<std::string> elements() && { return std::move(elements_); }
  const std::string& element(std::size_t i) const { return elements_.at(i); }

  std::size_t index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw Error("unknown element '" + std::string(name) + "'");
    return it->second;
  }

  bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }

  const std::vector<std::uint8_t>& leq_matrix() const& { return leq_; }
  std::vector<std::uint8_t> leq_matrix() && { return std::move(leq_); }

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.elements_ == b.elements_ && a.leq_ == b.leq_;
  }
  friend bool operator!=(const Preorder& a, const Preorder& b) { return !(a == b); }

 private:
  void build_index() {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(elements_[i], i).second) {
        throw Error("duplicate element name '" + elements_[i] + "'");
      }
    }
  }

  void transitive_close() {
    const std::size_t n = size();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
        }
      }
    }
  }

  std::vector<std::string> elements_;
  std::vector<std::uint8_t> leq_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Reverses the order: leq'[i][j] = leq[j][i]. Element names are kept.
inline Preorder opposite(const Preorder& p) {
  const std::size_t n = p.size();
  std::vector<std::uint8_t> rev(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rev[i * n + j] = p.leq(j, i) ? 1 : 0;
    }
  }
  return Preorder::from_leq(p.elements(), std::move(rev));
}

/// Componentwise product order on ordered pairs. The pair (i, j) of the
/// factors lands at flat index i * |right| + j; names are "(left,right)".
inline Preorder product(const Preorder& left, const Preorder& right) {
  const std::size_t nl = left.size();
  const std::size_t nr = right.size();
  std::vector<std::string> names;
  names.reserve(nl * nr);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      names.push_back("(" + left.element(i) + "," + right.element(j) + ")");
    }
  }
  const std::size_t n = nl * nr;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      for (std::size_t i2 = 0; i2 < nl; ++i2) {
        for (std::size_t j2 = 0; j2 < nr; ++j2) {
          if (left.leq(i, i2) && right.leq(j, j2)) {
            leq[(i * nr + j) * n + (i2 * nr + j2)] = 1;
          }
        }
      }
    }
  }
  return Preorder::from_leq(std::move(names), std::move(leq));
}

inline std::size_t pair_index(const Preorder& right, std::size_t i, std::size_t j) {
  return i * right.size() + j;
}

/// True iff the membership vector is closed in the given direction.
inline bool check_closed(const Preorder& p, const std::vector<std::uint8_t>& membership,
                         Direction direction) {
  if (membership.size() != p.size()) {
    throw Error("membership vector length does not match the preorder size");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!membership[i]) continue;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const bool reachable = direction == Direction::up ? p.leq(i, j) : p.leq(j, i);
      if (reachable && !membership[j]) return false;
    }
  }
  return true;
}

/// Smallest closed superset of `seed` in the given direction.
inline std::vector<std::uint8_t> close(const Preorder& p, std::vector<std::uint8_t> seed,
                                       Direction direction) {
  if (seed.size() != p.size()) {
    throw Error("membership vector length does not match the preorder size");
  }
  std::vector<std::uint8_t> out(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!seed[i]) continue;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const bool reachable = direction == Direction::up ? p.leq(i, j) : p.leq(j, i);
      if (reachable) out[j] = 1;
    }
  }
  return out;
}

/// An upward- or downward-closed subset of a preorder.
class ClosedSet {
 public:
  static ClosedSet closure(const Preorder& space, const std::vector<std::string>& seed,
                           Direction direction) {
    std::vector<std::uint8_t> member(space.size(), 0);
    for (const auto& name : seed) member[space.index_of(name)] = 1;
    return ClosedSet(space, close(space, std::move(member), direction), direction);
  }

  static ClosedSet from_membership(const Preorder& space, std::vector<std::uint8_t> membership,
                                   Direction direction) {
    if (!check_closed(space, membership, direction)) {
      throw Error(std::string("membership vector is not ") + to_string(direction) + "-closed");
    }
    return ClosedSet(space, std::move(membership), direction);
  }

  const Preorder& space() const { return space_; }
  Direction direction() const { return direction_; }
  const std::vector<std::uint8_t>& membership() const { return membership_; }
  bool member(std::size_t i) const { return membership_.at(i) != 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto m : membership_) c += m != 0;
    return c;
  }

  friend bool operator==(const ClosedSet& a, const ClosedSet& b) {
    return a.direction_ == b.direction_ && a.space_ == b.space_ && a.membership_ == b.membership_;
  }

 private:
  ClosedSet(Preorder space, std::vector<std::uint8_t> membership, Direction direction)
      : space_(std::move(space)), membership_(std::move(membership)), direction_(direction) {}

  Preorder space_;
  std::vector<std::uint8_t> membership_;
  Direction direction_;
};

/// A generator set of ordered pairs whose reflexive-transitive closure is
/// exactly leq, deterministic for a given preorder. Mutually related
/// elements are linked in one index-ordered cycle; across equivalence
/// classes the covering edges of the condensed partial order are emitted
/// between least-index representatives.
inline std::vector<std::pair<std::string, std::string>> canonical_covers(const Preorder& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n; ++i) {
    rep[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (p.leq(i, j) && p.leq(j, i)) {
        rep[i] = rep[j];
        break;
      }
    }
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t r = 0; r < n; ++r) {
    if (rep[r] != r) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (rep[i] == r) members.push_back(i);
    }
    for (std::size_t k = 0; k + 1 < members.size(); ++k) {
      covers.push_back({p.element(members[k]), p.element(members[k + 1])});
    }
    if (members.size() > 1) {
      covers.push_back({p.element(members.back()), p.element(members.front())});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (rep[a] != a) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (rep[b] != b || a == b || !p.leq(a, b) || p.leq(b, a)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (rep[k] != k || k == a || k == b) continue;
        if (p.leq(a, k) && !p.leq(k, a) && p.leq(k, b) && !p.leq(b, k)) direct = false;
      }
      if (direct) covers.push_back({p.element(a), p.element(b)});
    }
  }
  return covers;
}

/// All closed subsets, each exactly once, in mask order. Guarded by a hard
/// element cap so a mistyped space cannot explode the enumeration.
inline std::vector<ClosedSet> enumerate_closed_sets(const Preorder& p, Direction direction,
                                                    std::size_t cap = 6) {
  if (p.size() > cap) {
    throw Error("closed-set enumeration cap exceeded: " + std::to_string(p.size()) +
                " elements > cap " + std::to_string(cap));
  }
  std::vector<ClosedSet> out;
  const std::size_t n = p.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::uint8_t> member(n, 0);
    for (std::size_t i = 0; i < n; ++i) member[i] = (mask >> i) & 1;
    if (check_closed(p, member, direction)) {
      out.push_back(ClosedSet::from_membership(p, std::move(member), direction));
    }
  }
  return out;
}

}  // namespace norph
