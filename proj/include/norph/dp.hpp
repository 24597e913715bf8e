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
#include <utility>
#include <vector>

#include "norph/common.hpp"
#include "norph/poset.hpp"

namespace norph {

/// Checks the two feasibility-relation invariants over dom x cod:
/// shrinking the required functionality keeps feasibility, and growing
/// the available resources keeps feasibility. On failure optionally
/// reports which axis broke and at which elements.
inline bool is_monotone_rel(const Preorder& dom, const Preorder& cod,
                            const std::vector<std::uint8_t>& rel, std::string* why = nullptr) {
  const std::size_t np = dom.size();
  const std::size_t nq = cod.size();
  if (rel.size() != np * nq) throw Error("relation size does not match dom x cod");
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < nq; ++q) {
      if (!rel[p * nq + q]) continue;
      for (std::size_t p2 = 0; p2 < np; ++p2) {
        if (dom.leq(p2, p) && !rel[p2 * nq + q]) {
          if (why) {
            *why = "domain axis: feasible at '" + dom.element(p) + "' but not at smaller '" +
                   dom.element(p2) + "' (resource '" + cod.element(q) + "')";
          }
          return false;
        }
      }
      for (std::size_t q2 = 0; q2 < nq; ++q2) {
        if (cod.leq(q, q2) && !rel[p * nq + q2]) {
          if (why) {
            *why = "codomain axis: feasible at '" + cod.element(q) + "' but not at larger '" +
                   cod.element(q2) + "' (functionality '" + dom.element(p) + "')";
          }
          return false;
        }
      }
    }
  }
  return true;
}

/// Smallest valid feasibility relation containing the seed: every true
/// cell (p, q) spreads to all (p', q') with p' <= p and q <= q'.
inline std::vector<std::uint8_t> monotone_close(const Preorder& dom, const Preorder& cod,
                                                const std::vector<std::uint8_t>& seed) {
  const std::size_t np = dom.size();
  const std::size_t nq = cod.size();
  if (seed.size() != np * nq) throw Error("relation size does not match dom x cod");
  std::vector<std::uint8_t> out(np * nq, 0);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < nq; ++q) {
      if (!seed[p * nq + q]) continue;
      for (std::size_t p2 = 0; p2 < np; ++p2) {
        if (!dom.leq(p2, p)) continue;
        for (std::size_t q2 = 0; q2 < nq; ++q2) {
          if (cod.leq(q, q2)) out[p2 * nq + q2] = 1;
        }
      }
    }
  }
  return out;
}

/// A monotone Boolean feasibility relation between two preorders.
/// rel(p, q) reads: functionality p can be delivered with resources q.
class DesignProblem {
 public:
  DesignProblem() = default;

  /// Validates the invariants, or repairs the seed by closure when
  /// `autoclose` is set.
  static DesignProblem from_rel(Preorder dom, Preorder cod, std::vector<std::uint8_t> rel,
                                bool autoclose = false) {
    if (autoclose) {
      rel = monotone_close(dom, cod, rel);
    } else {
      std::string why;
      if (!is_monotone_rel(dom, cod, rel, &why)) {
        throw Error("feasibility relation violates monotonicity on the " + why);
      }
    }
    return DesignProblem(std::move(dom), std::move(cod), std::move(rel));
  }

  /// rel(p, q) = p <= q. Unit of composition.
  static DesignProblem identity(const Preorder& space) {
    return DesignProblem(space, space, space.leq_matrix());
  }

  const Preorder& dom() const { return dom_; }
  const Preorder& cod() const { return cod_; }
  bool rel(std::size_t p, std::size_t q) const { return rel_[p * cod_.size() + q] != 0; }
  const std::vector<std::uint8_t>& rel_matrix() const& { return rel_; }
  std::vector<std::uint8_t> rel_matrix() && { return std::move(rel_); }

  std::size_t true_count() const {
    std::size_t c = 0;
    for (auto v : rel_) c += v != 0;
    return c;
  }

  friend bool operator==(const DesignProblem& a, const DesignProblem& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.rel_ == b.rel_;
  }
  friend bool operator!=(const DesignProblem& a, const DesignProblem& b) { return !(a == b); }

 private:
  DesignProblem(Preorder dom, Preorder cod, std::vector<std::uint8_t> rel)
      : dom_(std::move(dom)), cod_(std::move(cod)), rel_(std::move(rel)) {}

  Preorder dom_;
  Preorder cod_;
  std::vector<std::uint8_t> rel_;
};

/// Re-checks the invariants of an already constructed value. Used by the
/// verification suites after operations that claim to preserve them.
inline void validate(const DesignProblem& d) {
  std::string why;
  if (!is_monotone_rel(d.dom(), d.cod(), d.rel_matrix(), &why)) {
    throw Error("feasibility relation violates monotonicity on the " + why);
  }
}

/// An upward-closed set of achievable functionalities.
class FunctionalityVector {
 public:
  FunctionalityVector() = default;

  static FunctionalityVector close_seed(const Preorder& space,
                                        const std::vector<std::string>& seed) {
    std::vector<std::uint8_t> member(space.size(), 0);
    for (const auto& name : seed) member[space.index_of(name)] = 1;
    return FunctionalityVector(space, close(space, std::move(member), Direction::up));
  }

  static FunctionalityVector from_membership(const Preorder& space,
                                             std::vector<std::uint8_t> values) {
    if (!check_closed(space, values, Direction::up)) {
      throw Error("functionality vector is not upward-closed");
    }
    return FunctionalityVector(space, std::move(values));
  }

  static FunctionalityVector empty(const Preorder& space) {
    return FunctionalityVector(space, std::vector<std::uint8_t>(space.size(), 0));
  }

  const Preorder& space() const { return space_; }
  bool at(std::size_t i) const { return values_.at(i) != 0; }
  const std::vector<std::uint8_t>& values() const& { return values_; }
  std::vector<std::uint8_t> values() && { return std::move(values_); }

  friend bool operator==(const FunctionalityVector& a, const FunctionalityVector& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  FunctionalityVector(Preorder space, std::vector<std::uint8_t> values)
      : space_(std::move(space)), values_(std::move(values)) {}

  Preorder space_;
  std::vector<std::uint8_t> values_;
};

/// A downward-closed set of affordable resource budgets.
class ResourceCovector {
 public:
  ResourceCovector() = default;

  static ResourceCovector close_seed(const Preorder& space, const std::vector<std::string>& seed) {
    std::vector<std::uint8_t> member(space.size(), 0);
    for (const auto& name : seed) member[space.index_of(name)] = 1;
    return ResourceCovector(space, close(space, std::move(member), Direction::down));
  }

  static ResourceCovector from_membership(const Preorder& space, std::vector<std::uint8_t> values) {
    if (!check_closed(space, values, Direction::down)) {
      throw Error("resource covector is not downward-closed");
    }
    return ResourceCovector(space, std::move(values));
  }

  static ResourceCovector empty(const Preorder& space) {
    return ResourceCovector(space, std::vector<std::uint8_t>(space.size(), 0));
  }

  const Preorder& space() const { return space_; }
  bool at(std::size_t i) const { return values_.at(i) != 0; }
  const std::vector<std::uint8_t>& values() const& { return values_; }
  std::vector<std::uint8_t> values() && { return std::move(values_); }

  friend bool operator==(const ResourceCovector& a, const ResourceCovector& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  ResourceCovector(Preorder space, std::vector<std::uint8_t> values)
      : space_(std::move(space)), values_(std::move(values)) {}

  Preorder space_;
  std::vector<std::uint8_t> values_;
};

/// Relational composition: out(p, r) = exists q with d(p, q) and e(q, r).
/// The or-of-ands product preserves both invariants.
inline DesignProblem compose(const DesignProblem& d, const DesignProblem& e) {
  if (d.cod() != e.dom()) throw Error("composition mismatch: cod of first != dom of second");
  const std::size_t np = d.dom().size();
  const std::size_t nq = d.cod().size();
  const std::size_t nr = e.cod().size();
  std::vector<std::uint8_t> rel(np * nr, 0);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < nq; ++q) {
      if (!d.rel(p, q)) continue;
      for (std::size_t r = 0; r < nr; ++r) {
        if (e.rel(q, r)) rel[p * nr + r] = 1;
      }
    }
  }
  return DesignProblem::from_rel(d.dom(), e.cod(), std::move(rel));
}

/// Pushes achievable functionalities forward through a problem:
/// out(q) = exists p with f(p) and d(p, q).
inline FunctionalityVector map_functionality(const DesignProblem& d, const FunctionalityVector& f) {
  if (f.space() != d.dom()) throw Error("functionality vector space does not match dom");
  std::vector<std::uint8_t> out(d.cod().size(), 0);
  for (std::size_t p = 0; p < d.dom().size(); ++p) {
    if (!f.at(p)) continue;
    for (std::size_t q = 0; q < d.cod().size(); ++q) {
      if (d.rel(p, q)) out[q] = 1;
    }
  }
  return FunctionalityVector::from_membership(d.cod(), std::move(out));
}

/// Pulls affordable budgets backward through a problem:
/// out(p) = exists q with d(p, q) and r(q).
inline ResourceCovector map_resources(const DesignProblem& d, const ResourceCovector& r) {
  if (r.space() != d.cod()) throw Error("resource covector space does not match cod");
  std::vector<std::uint8_t> out(d.dom().size(), 0);
  for (std::size_t q = 0; q < d.cod().size(); ++q) {
    if (!r.at(q)) continue;
    for (std::size_t p = 0; p < d.dom().size(); ++p) {
      if (d.rel(p, q)) out[p] = 1;
    }
  }
  return ResourceCovector::from_membership(d.dom(), std::move(out));
}

/// Full contraction: some functionality in f is deliverable within some
/// budget in r.
inline bool feasible(const FunctionalityVector& f, const DesignProblem& d,
                     const ResourceCovector& r) {
  if (f.space() != d.dom()) throw Error("functionality vector space does not match dom");
  if (r.space() != d.cod()) throw Error("resource covector space does not match cod");
  for (std::size_t p = 0; p < d.dom().size(); ++p) {
    if (!f.at(p)) continue;
    for (std::size_t q = 0; q < d.cod().size(); ++q) {
      if (d.rel(p, q) && r.at(q)) return true;
    }
  }
  return false;
}

/// Parallel pairing on product spaces: the two problems run side by side
/// and feasibility is the conjunction.
inline DesignProblem tensor(const DesignProblem& a, const DesignProblem& b) {
  Preorder dom = product(a.dom(), b.dom());
  Preorder cod = product(a.cod(), b.cod());
  const std::size_t nbp = b.dom().size();
  const std::size_t nbq = b.cod().size();
  const std::size_t nq = cod.size();
  std::vector<std::uint8_t> rel(dom.size() * nq, 0);
  for (std::size_t p1 = 0; p1 < a.dom().size(); ++p1) {
    for (std::size_t p2 = 0; p2 < nbp; ++p2) {
      for (std::size_t q1 = 0; q1 < a.cod().size(); ++q1) {
        for (std::size_t q2 = 0; q2 < nbq; ++q2) {
          if (a.rel(p1, q1) && b.rel(p2, q2)) {
            rel[(p1 * nbp + p2) * nq + (q1 * nbq + q2)] = 1;
          }
        }
      }
    }
  }
  return DesignProblem::from_rel(std::move(dom), std::move(cod), std::move(rel));
}

/// The evaluation vector on opposite(P) x P whose members are the pairs
/// (p1, p2) with p1 <= p2 in P. Upward-closed in the twisted product.
inline FunctionalityVector unit_eta(const Preorder& p) {
  Preorder space = product(opposite(p), p);
  const std::size_t n = p.size();
  std::vector<std::uint8_t> values(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(i, j)) values[i * n + j] = 1;
    }
  }
  return FunctionalityVector::from_membership(std::move(space), std::move(values));
}

/// Reads a problem P -> Q as a vector on opposite(P) x Q. The relation
/// invariants are exactly upward closure in the twisted product.
inline FunctionalityVector transpose(const DesignProblem& d) {
  Preorder space = product(opposite(d.dom()), d.cod());
  return FunctionalityVector::from_membership(std::move(space), d.rel_matrix());
}

/// Inverse of transpose. The vector's space must be structurally equal to
/// opposite(dom) x cod for the given factors.
inline DesignProblem untranspose(const FunctionalityVector& v, const Preorder& dom,
                                 const Preorder& cod) {
  if (v.space() != product(opposite(dom), cod)) {
    throw Error("vector space is not the twisted product of the given factors");
  }
  return DesignProblem::from_rel(dom, cod, v.values());
}

/// Pointwise implication order: d <= e when every cell feasible in d is
/// feasible in e.
inline bool leq_dp(const DesignProblem& d, const DesignProblem& e) {
  if (d.dom() != e.dom() || d.cod() != e.cod()) {
    throw Error("order comparison requires matching dom and cod");
  }
  for (std::size_t i = 0; i < d.rel_matrix().size(); ++i) {
    if (d.rel_matrix()[i] && !e.rel_matrix()[i]) return false;
  }
  return true;
}

/// All valid problems between two spaces, in mask order over the cell grid
/// (cell (p, q) is bit p * |cod| + q). Capped by total cell count.
inline std::vector<DesignProblem> enumerate_design_problems(const Preorder& dom,
                                                            const Preorder& cod,
                                                            std::size_t cap = 16) {
  const std::size_t cells = dom.size() * cod.size();
  if (cells > cap) {
    throw Error("design-problem enumeration cap exceeded: " + std::to_string(cells) +
                " cells > cap " + std::to_string(cap));
  }
  std::vector<DesignProblem> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    std::vector<std::uint8_t> rel(cells, 0);
    for (std::size_t i = 0; i < cells; ++i) rel[i] = (mask >> i) & 1;
    if (is_monotone_rel(dom, cod, rel)) {
      out.push_back(DesignProblem::from_rel(dom, cod, std::move(rel)));
    }
  }
  return out;
}

}  // namespace norph
