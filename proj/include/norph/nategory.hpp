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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "norph/common.hpp"

namespace norph {

/// Which argument of composition a norphism is being traded against.
/// `left` attaches a morphism before the norphism's hom-set, `right`
/// after it. These correspond to the pre/post sides of the concrete
/// propagation operations.
enum class CompSide : std::uint8_t { left, right };

inline const char* to_string(CompSide s) { return s == CompSide::left ? "left" : "right"; }

/// A finite category given by explicit tables. Construction verifies the
/// unit and associativity laws exhaustively; values are immutable after.
class FiniteCategory {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Morphism {
    std::string name;
    std::size_t dom;
    std::size_t cod;
  };

  FiniteCategory() = default;

  /// `comp` is row-major over morphism pairs; entry (f, g) holds f;g when
  /// cod(f) == dom(g) and npos otherwise.
  static FiniteCategory build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                              std::vector<std::size_t> identities, std::vector<std::size_t> comp) {
    FiniteCategory c;
    c.objects_ = std::move(objects);
    c.morphisms_ = std::move(morphisms);
    c.identities_ = std::move(identities);
    c.comp_ = std::move(comp);

    const std::size_t no = c.objects_.size();
    const std::size_t nm = c.morphisms_.size();
    for (std::size_t m = 0; m < nm; ++m) {
      const auto& mo = c.morphisms_[m];
      if (mo.dom >= no || mo.cod >= no) {
        throw Error("dangling object id on morphism '" + mo.name + "'");
      }
      if (!c.morphism_index_.emplace(mo.name, m).second) {
        throw Error("duplicate morphism name '" + mo.name + "'");
      }
    }
    c.homs_.assign(no * no, {});
    for (std::size_t m = 0; m < nm; ++m) {
      c.homs_[c.morphisms_[m].dom * no + c.morphisms_[m].cod].push_back(m);
    }

    if (c.identities_.size() != no) throw Error("identity table size does not match object count");
    for (std::size_t o = 0; o < no; ++o) {
      const std::size_t id = c.identities_[o];
      if (id >= nm) throw Error("dangling identity id on object '" + c.objects_[o] + "'");
      if (c.morphisms_[id].dom != o || c.morphisms_[id].cod != o) {
        throw Error("identity of object '" + c.objects_[o] + "' is not an endomorphism");
      }
    }

    if (c.comp_.size() != nm * nm) throw Error("composition table size is not squared");
    for (std::size_t f = 0; f < nm; ++f) {
      for (std::size_t g = 0; g < nm; ++g) {
        const std::size_t fg = c.comp_[f * nm + g];
        const bool composable = c.morphisms_[f].cod == c.morphisms_[g].dom;
        if (!composable) {
          if (fg != npos) {
            throw Error("composition defined for non-composable pair ('" + c.morphisms_[f].name +
                        "', '" + c.morphisms_[g].name + "')");
          }
          continue;
        }
        if (fg == npos) {
          throw Error("composition missing for composable pair ('" + c.morphisms_[f].name +
                      "', '" + c.morphisms_[g].name + "')");
        }
        if (fg >= nm) {
          throw Error("dangling composite id for pair ('" + c.morphisms_[f].name + "', '" +
                      c.morphisms_[g].name + "')");
        }
        if (c.morphisms_[fg].dom != c.morphisms_[f].dom ||
            c.morphisms_[fg].cod != c.morphisms_[g].cod) {
          throw Error("ill-typed composite for pair ('" + c.morphisms_[f].name + "', '" +
                      c.morphisms_[g].name + "')");
        }
      }
    }

    for (std::size_t f = 0; f < nm; ++f) {
      const auto& mo = c.morphisms_[f];
      if (c.comp_[c.identities_[mo.dom] * nm + f] != f) {
        throw Error("left unit law fails for '" + mo.name + "'");
      }
      if (c.comp_[f * nm + c.identities_[mo.cod]] != f) {
        throw Error("right unit law fails for '" + mo.name + "'");
      }
    }

    for (std::size_t f = 0; f < nm; ++f) {
      for (std::size_t g = 0; g < nm; ++g) {
        if (c.morphisms_[f].cod != c.morphisms_[g].dom) continue;
        for (std::size_t h = 0; h < nm; ++h) {
          if (c.morphisms_[g].cod != c.morphisms_[h].dom) continue;
          const std::size_t fg_h = c.comp_[c.comp_[f * nm + g] * nm + h];
          const std::size_t f_gh = c.comp_[f * nm + c.comp_[g * nm + h]];
          if (fg_h != f_gh) {
            throw Error("associativity fails on triple ('" + c.morphisms_[f].name + "', '" +
                        c.morphisms_[g].name + "', '" + c.morphisms_[h].name + "')");
          }
        }
      }
    }
    return c;
  }

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object(std::size_t o) const { return objects_.at(o); }
  const Morphism& morphism(std::size_t m) const { return morphisms_.at(m); }

  std::size_t object_index(const std::string& name) const {
    for (std::size_t o = 0; o < objects_.size(); ++o) {
      if (objects_[o] == name) return o;
    }
    throw Error("unknown object '" + name + "'");
  }

  std::size_t morphism_index(const std::string& name) const {
    auto it = morphism_index_.find(name);
    if (it == morphism_index_.end()) throw Error("unknown morphism '" + name + "'");
    return it->second;
  }

  const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const {
    return homs_.at(a * objects_.size() + b);
  }

  std::size_t identity(std::size_t o) const { return identities_.at(o); }

  /// Diagrammatic order: f : a -> b then g : b -> c gives f;g : a -> c.
  std::size_t compose(std::size_t f, std::size_t g) const {
    if (morphisms_.at(f).cod != morphisms_.at(g).dom) {
      throw Error("morphisms '" + morphisms_[f].name + "' and '" + morphisms_[g].name +
                  "' are not composable");
    }
    return comp_[f * morphisms_.size() + g];
  }

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<std::size_t> comp_;
  std::vector<std::vector<std::size_t>> homs_;
  std::unordered_map<std::string, std::size_t> morphism_index_;
};

/// An order on morphisms, relating only parallel ones. Monotonicity of
/// composition is a property checked separately, not a construction
/// precondition, so deliberately broken orders can be built and tested.
class HomPreorder {
 public:
  HomPreorder() = default;

  static HomPreorder discrete(const FiniteCategory& cat) {
    const std::size_t nm = cat.morphism_count();
    std::vector<std::uint8_t> leq(nm * nm, 0);
    for (std::size_t m = 0; m < nm; ++m) leq[m * nm + m] = 1;
    return HomPreorder(std::move(leq), nm);
  }

  static HomPreorder from_leq(const FiniteCategory& cat, std::vector<std::uint8_t> leq) {
    const std::size_t nm = cat.morphism_count();
    if (leq.size() != nm * nm) throw Error("hom-order matrix size is not squared");
    for (std::size_t m = 0; m < nm; ++m) {
      if (!leq[m * nm + m]) {
        throw Error("hom-order not reflexive at '" + cat.morphism(m).name + "'");
      }
    }
    for (std::size_t f = 0; f < nm; ++f) {
      for (std::size_t g = 0; g < nm; ++g) {
        if (!leq[f * nm + g] || f == g) continue;
        if (cat.morphism(f).dom != cat.morphism(g).dom ||
            cat.morphism(f).cod != cat.morphism(g).cod) {
          throw Error("hom-order relates non-parallel morphisms '" + cat.morphism(f).name +
                      "' and '" + cat.morphism(g).name + "'");
        }
        for (std::size_t h = 0; h < nm; ++h) {
          if (leq[g * nm + h] && !leq[f * nm + h]) {
            throw Error("hom-order not transitive at '" + cat.morphism(f).name + "' <= '" +
                        cat.morphism(g).name + "' <= '" + cat.morphism(h).name + "'");
          }
        }
      }
    }
    return HomPreorder(std::move(leq), nm);
  }

  bool leq(std::size_t f, std::size_t g) const { return leq_[f * count_ + g] != 0; }

 private:
  HomPreorder(std::vector<std::uint8_t> leq, std::size_t count)
      : leq_(std::move(leq)), count_(count) {}

  std::vector<std::uint8_t> leq_;
  std::size_t count_ = 0;
};

/// A ban on one hom-set, curried to its indicator vector. `banned` is
/// aligned with the order of cat.hom(dom, cod).
struct NorphismGeneric {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<std::uint8_t> banned;
};

inline NorphismGeneric make_generic_norphism(const FiniteCategory& cat, std::size_t a,
                                             std::size_t b, std::vector<std::uint8_t> banned) {
  if (banned.size() != cat.hom(a, b).size()) {
    throw Error("banned vector length does not match the hom-set size");
  }
  return NorphismGeneric{a, b, std::move(banned)};
}

inline NorphismGeneric zero_norphism(const FiniteCategory& cat, std::size_t a, std::size_t b) {
  return NorphismGeneric{a, b, std::vector<std::uint8_t>(cat.hom(a, b).size(), 0)};
}

/// The pairing of a norphism with a morphism: 1 = banned.
inline bool incompatibility(const FiniteCategory& cat, const NorphismGeneric& n, std::size_t f) {
  const auto& hom = cat.hom(n.dom, n.cod);
  for (std::size_t i = 0; i < hom.size(); ++i) {
    if (hom[i] == f) return n.banned[i] != 0;
  }
  throw Error("morphism '" + cat.morphism(f).name + "' is not in the norphism's hom-set");
}

/// Pluggable semantics for trading a morphism against a norphism. Any
/// replacement must keep the equivariance implications; the default is
/// the exact rule, which makes them equalities.
struct InexactRules {
  std::function<NorphismGeneric(const FiniteCategory&, std::size_t, const NorphismGeneric&)> left;
  std::function<NorphismGeneric(const FiniteCategory&, const NorphismGeneric&, std::size_t)> right;
};

/// left: given f : a -> b and n on (a, c), ban g : b -> c iff n bans f;g.
/// right: given g : b -> c and n on (a, c), ban f : a -> b iff n bans f;g.
inline InexactRules exact_rules() {
  InexactRules rules;
  rules.left = [](const FiniteCategory& cat, std::size_t f, const NorphismGeneric& n) {
    const std::size_t b = cat.morphism(f).cod;
    const auto& hom = cat.hom(b, n.cod);
    std::vector<std::uint8_t> banned(hom.size(), 0);
    for (std::size_t i = 0; i < hom.size(); ++i) {
      banned[i] = incompatibility(cat, n, cat.compose(f, hom[i])) ? 1 : 0;
    }
    return NorphismGeneric{b, n.cod, std::move(banned)};
  };
  rules.right = [](const FiniteCategory& cat, const NorphismGeneric& n, std::size_t g) {
    const std::size_t b = cat.morphism(g).dom;
    const auto& hom = cat.hom(n.dom, b);
    std::vector<std::uint8_t> banned(hom.size(), 0);
    for (std::size_t i = 0; i < hom.size(); ++i) {
      banned[i] = incompatibility(cat, n, cat.compose(hom[i], g)) ? 1 : 0;
    }
    return NorphismGeneric{n.dom, b, std::move(banned)};
  };
  return rules;
}

/// Trades a morphism against a norphism on the chosen side. With side ==
/// left, x : a -> b and n on (a, c) give a norphism on (b, c); with side
/// == right, x : b -> c and n on (a, c) give a norphism on (a, b).
inline NorphismGeneric inexact_compose(const FiniteCategory& cat, std::size_t x,
                                       const NorphismGeneric& n, CompSide side,
                                       const InexactRules& rules) {
  if (side == CompSide::left) {
    if (cat.morphism(x).dom != n.dom) {
      throw Error("left composition requires dom of morphism == dom of norphism");
    }
    return rules.left(cat, x, n);
  }
  if (cat.morphism(x).cod != n.cod) {
    throw Error("right composition requires cod of morphism == cod of norphism");
  }
  return rules.right(cat, n, x);
}

inline NorphismGeneric inexact_compose(const FiniteCategory& cat, std::size_t x,
                                       const NorphismGeneric& n, CompSide side) {
  return inexact_compose(cat, x, n, side, exact_rules());
}

struct EquivarianceViolation {
  std::size_t norphism;
  std::size_t f;
  std::size_t g;
  std::string condition;
};

struct EquivarianceReport {
  std::vector<EquivarianceViolation> violations;
  bool exact = true;
  std::size_t checked = 0;
};

/// Checks both equivariance implications for every norphism against every
/// composable morphism pair: a ban produced by the rules must already be
/// a ban of the original norphism on the composite. `exact` additionally
/// records whether the converse held everywhere.
inline EquivarianceReport check_equivariance(const FiniteCategory& cat,
                                             const std::vector<NorphismGeneric>& norphisms,
                                             const InexactRules& rules) {
  EquivarianceReport report;
  for (std::size_t ni = 0; ni < norphisms.size(); ++ni) {
    const auto& n = norphisms[ni];
    for (std::size_t b = 0; b < cat.object_count(); ++b) {
      for (std::size_t f : cat.hom(n.dom, b)) {
        const NorphismGeneric left = rules.left(cat, f, n);
        const auto& hom = cat.hom(b, n.cod);
        for (std::size_t i = 0; i < hom.size(); ++i) {
          const bool inexact = left.banned[i] != 0;
          const bool direct = incompatibility(cat, n, cat.compose(f, hom[i]));
          ++report.checked;
          if (inexact && !direct) {
            report.violations.push_back({ni, f, hom[i], "left-ban-not-implied"});
          }
          if (inexact != direct) report.exact = false;
        }
      }
      for (std::size_t g : cat.hom(b, n.cod)) {
        const NorphismGeneric right = rules.right(cat, n, g);
        const auto& hom = cat.hom(n.dom, b);
        for (std::size_t i = 0; i < hom.size(); ++i) {
          const bool inexact = right.banned[i] != 0;
          const bool direct = incompatibility(cat, n, cat.compose(hom[i], g));
          ++report.checked;
          if (inexact && !direct) {
            report.violations.push_back({ni, hom[i], g, "right-ban-not-implied"});
          }
          if (inexact != direct) report.exact = false;
        }
      }
    }
  }
  return report;
}

/// True iff the banned set is upward-closed in the hom-order: banning a
/// morphism bans everything above it.
inline bool check_expansiveness(const FiniteCategory& cat, const HomPreorder& order,
                                const NorphismGeneric& n) {
  const auto& hom = cat.hom(n.dom, n.cod);
  for (std::size_t i = 0; i < hom.size(); ++i) {
    if (!n.banned[i]) continue;
    for (std::size_t j = 0; j < hom.size(); ++j) {
      if (order.leq(hom[i], hom[j]) && !n.banned[j]) return false;
    }
  }
  return true;
}

/// True iff composition is monotone in both arguments under the order:
/// f <= f' gives f;g <= f';g and g <= g' gives f;g <= f;g'.
inline bool check_monotone_homs(const FiniteCategory& cat, const HomPreorder& order) {
  const std::size_t nm = cat.morphism_count();
  for (std::size_t f = 0; f < nm; ++f) {
    for (std::size_t f2 = 0; f2 < nm; ++f2) {
      if (!order.leq(f, f2)) continue;
      for (std::size_t g = 0; g < nm; ++g) {
        if (cat.morphism(f).cod != cat.morphism(g).dom) continue;
        if (!order.leq(cat.compose(f, g), cat.compose(f2, g))) return false;
      }
      for (std::size_t g = 0; g < nm; ++g) {
        if (cat.morphism(g).cod != cat.morphism(f).dom) continue;
        if (!order.leq(cat.compose(g, f), cat.compose(g, f2))) return false;
      }
    }
  }
  return true;
}

/// An ordered pair of parallel morphisms, lo <= hi in the hom-order.
struct OrderWitness {
  std::size_t lo;
  std::size_t hi;
};

inline OrderWitness make_witness(const FiniteCategory& cat, const HomPreorder& order,
                                 std::size_t lo, std::size_t hi) {
  if (cat.morphism(lo).dom != cat.morphism(hi).dom ||
      cat.morphism(lo).cod != cat.morphism(hi).cod) {
    throw Error("witness morphisms '" + cat.morphism(lo).name + "' and '" +
                cat.morphism(hi).name + "' are not parallel");
  }
  if (!order.leq(lo, hi)) {
    throw Error("'" + cat.morphism(lo).name + "' is not below '" + cat.morphism(hi).name +
                "' in the hom-order");
  }
  return OrderWitness{lo, hi};
}

/// From f <= g in (a, b) and k <= h in (b, c), produces f;k <= g;h in
/// (a, c). Fails if the order does not actually relate the composites,
/// which would mean composition is not monotone.
inline OrderWitness compose_witness(const FiniteCategory& cat, const HomPreorder& order,
                                    const OrderWitness& w1, const OrderWitness& w2) {
  if (cat.morphism(w1.lo).cod != cat.morphism(w2.lo).dom) {
    throw Error("witnesses are not composable");
  }
  const std::size_t lo = cat.compose(w1.lo, w2.lo);
  const std::size_t hi = cat.compose(w1.hi, w2.hi);
  if (!order.leq(lo, hi)) {
    throw Error("monotonicity violation: composite '" + cat.morphism(lo).name +
                "' is not below '" + cat.morphism(hi).name + "'");
  }
  return OrderWitness{lo, hi};
}

}  // namespace norph
