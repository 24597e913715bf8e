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
#include "norph/dp.hpp"
#include "norph/poset.hpp"

namespace norph {

/// Checks the impossibility-relation invariants over dom x cod: a banned
/// cell (p, q) stays banned when the functionality grows or the budget
/// shrinks. Equivalently the cell set is downward-closed in the twisted
/// product opposite(dom) x cod.
inline bool is_norphism_rel(const Preorder& dom, const Preorder& cod,
                            const std::vector<std::uint8_t>& rel, std::string* why = nullptr) {
  const std::size_t np = dom.size();
  const std::size_t nq = cod.size();
  if (rel.size() != np * nq) throw Error("relation size does not match dom x cod");
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < nq; ++q) {
      if (!rel[p * nq + q]) continue;
      for (std::size_t p2 = 0; p2 < np; ++p2) {
        if (dom.leq(p, p2) && !rel[p2 * nq + q]) {
          if (why) {
            *why = "domain axis: banned at '" + dom.element(p) + "' but not at larger '" +
                   dom.element(p2) + "' (resource '" + cod.element(q) + "')";
          }
          return false;
        }
      }
      for (std::size_t q2 = 0; q2 < nq; ++q2) {
        if (cod.leq(q2, q) && !rel[p * nq + q2]) {
          if (why) {
            *why = "codomain axis: banned at '" + cod.element(q) + "' but not at smaller '" +
                   cod.element(q2) + "' (functionality '" + dom.element(p) + "')";
          }
          return false;
        }
      }
    }
  }
  return true;
}

/// Negative information about problems between two spaces: a set of
/// feasibility claims known to be impossible. A problem asserting any of
/// them is banned.
class NorphismDP {
 public:
  NorphismDP() = default;

  static NorphismDP from_rel(Preorder dom, Preorder cod, std::vector<std::uint8_t> rel,
                             bool autoclose = false) {
    if (autoclose) {
      rel = twisted_close(dom, cod, rel);
    } else {
      std::string why;
      if (!is_norphism_rel(dom, cod, rel, &why)) {
        throw Error("impossibility relation violates closure on the " + why);
      }
    }
    return NorphismDP(std::move(dom), std::move(cod), std::move(rel));
  }

  /// Bans nothing.
  static NorphismDP zero(Preorder dom, Preorder cod) {
    std::vector<std::uint8_t> rel(dom.size() * cod.size(), 0);
    return NorphismDP(std::move(dom), std::move(cod), std::move(rel));
  }

  /// Closure of a seed in the twisted product: cell (p, q) spreads to all
  /// (p', q') with p <= p' and q' <= q.
  static std::vector<std::uint8_t> twisted_close(const Preorder& dom, const Preorder& cod,
                                                 const std::vector<std::uint8_t>& seed) {
    const std::size_t np = dom.size();
    const std::size_t nq = cod.size();
    if (seed.size() != np * nq) throw Error("relation size does not match dom x cod");
    std::vector<std::uint8_t> out(np * nq, 0);
    for (std::size_t p = 0; p < np; ++p) {
      for (std::size_t q = 0; q < nq; ++q) {
        if (!seed[p * nq + q]) continue;
        for (std::size_t p2 = 0; p2 < np; ++p2) {
          if (!dom.leq(p, p2)) continue;
          for (std::size_t q2 = 0; q2 < nq; ++q2) {
            if (cod.leq(q2, q)) out[p2 * nq + q2] = 1;
          }
        }
      }
    }
    return out;
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

  friend bool operator==(const NorphismDP& a, const NorphismDP& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.rel_ == b.rel_;
  }
  friend bool operator!=(const NorphismDP& a, const NorphismDP& b) { return !(a == b); }

 private:
  NorphismDP(Preorder dom, Preorder cod, std::vector<std::uint8_t> rel)
      : dom_(std::move(dom)), cod_(std::move(cod)), rel_(std::move(rel)) {}

  Preorder dom_;
  Preorder cod_;
  std::vector<std::uint8_t> rel_;
};

inline void validate(const NorphismDP& n) {
  std::string why;
  if (!is_norphism_rel(n.dom(), n.cod(), n.rel_matrix(), &why)) {
    throw Error("impossibility relation violates closure on the " + why);
  }
}

/// "No functionality in f can be delivered within any budget in r."
/// Banned cells are exactly f x r.
inline NorphismDP performance_norphism(const FunctionalityVector& f, const ResourceCovector& r) {
  const std::size_t np = f.space().size();
  const std::size_t nq = r.space().size();
  std::vector<std::uint8_t> rel(np * nq, 0);
  for (std::size_t p = 0; p < np; ++p) {
    if (!f.at(p)) continue;
    for (std::size_t q = 0; q < nq; ++q) {
      if (r.at(q)) rel[p * nq + q] = 1;
    }
  }
  return NorphismDP::from_rel(f.space(), r.space(), std::move(rel));
}

/// Pools the impossibility facts of both arguments.
inline NorphismDP join(const NorphismDP& a, const NorphismDP& b) {
  if (a.dom() != b.dom() || a.cod() != b.cod()) {
    throw Error("join requires matching dom and cod");
  }
  std::vector<std::uint8_t> rel(a.rel_matrix());
  for (std::size_t i = 0; i < rel.size(); ++i) rel[i] = rel[i] || b.rel_matrix()[i];
  return NorphismDP::from_rel(a.dom(), a.cod(), std::move(rel));
}

/// True iff the problem asserts feasibility on some banned cell.
inline bool bans(const NorphismDP& n, const DesignProblem& m) {
  if (n.dom() != m.dom() || n.cod() != m.cod()) {
    throw Error("ban check requires matching dom and cod");
  }
  for (std::size_t i = 0; i < n.rel_matrix().size(); ++i) {
    if (n.rel_matrix()[i] && m.rel_matrix()[i]) return true;
  }
  return false;
}

/// Transports impossibility knowledge across an attached problem.
///
/// side == pre, attach e : P -> R, n on (P, Q): the result lives on
/// (R, Q) and bans m' exactly when n bans compose(e, m').
/// side == post, attach g : R -> Q, n on (P, Q): the result lives on
/// (P, R) and bans m'' exactly when n bans compose(m'', g).
inline NorphismDP propagate(const NorphismDP& n, const DesignProblem& attach, Side side) {
  if (side == Side::pre) {
    if (attach.dom() != n.dom()) {
      throw Error("pre propagation requires dom of attach == dom of norphism");
    }
    const std::size_t np = n.dom().size();
    const std::size_t nq = n.cod().size();
    const std::size_t nr = attach.cod().size();
    std::vector<std::uint8_t> rel(nr * nq, 0);
    for (std::size_t p = 0; p < np; ++p) {
      for (std::size_t r = 0; r < nr; ++r) {
        if (!attach.rel(p, r)) continue;
        for (std::size_t q = 0; q < nq; ++q) {
          if (n.rel(p, q)) rel[r * nq + q] = 1;
        }
      }
    }
    return NorphismDP::from_rel(attach.cod(), n.cod(), std::move(rel));
  }
  if (attach.cod() != n.cod()) {
    throw Error("post propagation requires cod of attach == cod of norphism");
  }
  const std::size_t np = n.dom().size();
  const std::size_t nq = n.cod().size();
  const std::size_t nr = attach.dom().size();
  std::vector<std::uint8_t> rel(np * nr, 0);
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t r = 0; r < nr; ++r) {
      if (!attach.rel(r, q)) continue;
      for (std::size_t p = 0; p < np; ++p) {
        if (n.rel(p, q)) rel[p * nr + r] = 1;
      }
    }
  }
  return NorphismDP::from_rel(n.dom(), attach.dom(), std::move(rel));
}

/// "No pool of resources can produce functionality outside itself."
/// Each pool is a downward-closed subset of the space; the banned cells
/// are the pairs (p1, p2) with p1 outside a pool and p2 inside it. Never
/// bans the identity problem.
inline NorphismDP resource_limit_schema(const Preorder& space,
                                        const std::vector<ResourceCovector>& pools) {
  const std::size_t n = space.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (const auto& pool : pools) {
    if (pool.space() != space) throw Error("pool space does not match the schema space");
    for (std::size_t p1 = 0; p1 < n; ++p1) {
      if (pool.at(p1)) continue;
      for (std::size_t p2 = 0; p2 < n; ++p2) {
        if (pool.at(p2)) rel[p1 * n + p2] = 1;
      }
    }
  }
  return NorphismDP::from_rel(space, space, std::move(rel));
}

/// All problems between the norphism's spaces that it bans, in the
/// enumeration order of enumerate_design_problems.
inline std::vector<DesignProblem> banned_set(const NorphismDP& n, std::size_t cap = 16) {
  std::vector<DesignProblem> out;
  for (auto& m : enumerate_design_problems(n.dom(), n.cod(), cap)) {
    if (bans(n, m)) out.push_back(std::move(m));
  }
  return out;
}

/// One generating (functionality, budget) pair per banned cell. Joining
/// the performance norphisms of all parts reproduces the original.
struct NorphismPart {
  FunctionalityVector f;
  ResourceCovector r;
};

inline std::vector<NorphismPart> decompose(const NorphismDP& n) {
  std::vector<NorphismPart> parts;
  for (std::size_t p = 0; p < n.dom().size(); ++p) {
    for (std::size_t q = 0; q < n.cod().size(); ++q) {
      if (!n.rel(p, q)) continue;
      parts.push_back(NorphismPart{
          FunctionalityVector::close_seed(n.dom(), {n.dom().element(p)}),
          ResourceCovector::close_seed(n.cod(), {n.cod().element(q)}),
      });
    }
  }
  return parts;
}

/// All valid norphisms between two spaces, in mask order over the cell
/// grid. Capped by total cell count.
inline std::vector<NorphismDP> enumerate_norphisms(const Preorder& dom, const Preorder& cod,
                                                   std::size_t cap = 16) {
  const std::size_t cells = dom.size() * cod.size();
  if (cells > cap) {
    throw Error("norphism enumeration cap exceeded: " + std::to_string(cells) + " cells > cap " +
                std::to_string(cap));
  }
  std::vector<NorphismDP> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    std::vector<std::uint8_t> rel(cells, 0);
    for (std::size_t i = 0; i < cells; ++i) rel[i] = (mask >> i) & 1;
    if (is_norphism_rel(dom, cod, rel)) {
      out.push_back(NorphismDP::from_rel(dom, cod, std::move(rel)));
    }
  }
  return out;
}

}  // namespace norph
