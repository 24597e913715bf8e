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
#include <unordered_map>
#include <utility>
#include <vector>

#include "norph/common.hpp"
#include "norph/dp.hpp"
#include "norph/nategory.hpp"
#include "norph/norphism.hpp"
#include "norph/poset.hpp"

namespace norph {

/// The concrete instance of the generic kernel: one object per named
/// space, every valid design problem between each pair as a morphism,
/// matrix product as composition, pointwise implication as hom-order.
struct DpInstance {
  FiniteCategory cat;
  std::vector<std::pair<std::string, Preorder>> spaces;
  std::vector<DesignProblem> values;
  HomPreorder order;
};

/// Enumerates all morphisms between every pair of the given spaces and
/// assembles the category. The per-pair cell cap bounds the enumeration;
/// axioms are re-verified by FiniteCategory::build.
inline DpInstance make_dp_instance(std::vector<std::pair<std::string, Preorder>> spaces,
                                   std::size_t cap = 16) {
  const std::size_t no = spaces.size();
  std::vector<std::string> object_names;
  for (const auto& [name, space] : spaces) object_names.push_back(name);

  std::vector<FiniteCategory::Morphism> morphisms;
  std::vector<DesignProblem> values;
  std::unordered_map<std::string, std::size_t> by_key;
  auto key_of = [](std::size_t a, std::size_t b, const std::vector<std::uint8_t>& rel) {
    std::string key = std::to_string(a) + "|" + std::to_string(b) + "|";
    for (auto v : rel) key.push_back(v ? '1' : '0');
    return key;
  };

  for (std::size_t a = 0; a < no; ++a) {
    for (std::size_t b = 0; b < no; ++b) {
      auto problems = enumerate_design_problems(spaces[a].second, spaces[b].second, cap);
      for (std::size_t k = 0; k < problems.size(); ++k) {
        const std::string name =
            spaces[a].first + "->" + spaces[b].first + "#" + std::to_string(k);
        by_key.emplace(key_of(a, b, problems[k].rel_matrix()), morphisms.size());
        morphisms.push_back({name, a, b});
        values.push_back(std::move(problems[k]));
      }
    }
  }

  std::vector<std::size_t> identities(no);
  for (std::size_t o = 0; o < no; ++o) {
    const auto id = DesignProblem::identity(spaces[o].second);
    identities[o] = by_key.at(key_of(o, o, id.rel_matrix()));
  }

  const std::size_t nm = morphisms.size();
  std::vector<std::size_t> comp(nm * nm, FiniteCategory::npos);
  for (std::size_t f = 0; f < nm; ++f) {
    for (std::size_t g = 0; g < nm; ++g) {
      if (morphisms[f].cod != morphisms[g].dom) continue;
      const auto fg = compose(values[f], values[g]);
      comp[f * nm + g] = by_key.at(key_of(morphisms[f].dom, morphisms[g].cod, fg.rel_matrix()));
    }
  }

  std::vector<std::uint8_t> leq(nm * nm, 0);
  for (std::size_t f = 0; f < nm; ++f) {
    for (std::size_t g = 0; g < nm; ++g) {
      if (morphisms[f].dom != morphisms[g].dom || morphisms[f].cod != morphisms[g].cod) continue;
      if (leq_dp(values[f], values[g])) leq[f * nm + g] = 1;
    }
  }

  DpInstance inst;
  inst.cat = FiniteCategory::build(std::move(object_names), std::move(morphisms),
                                   std::move(identities), std::move(comp));
  inst.order = HomPreorder::from_leq(inst.cat, std::move(leq));
  inst.spaces = std::move(spaces);
  inst.values = std::move(values);
  return inst;
}

inline std::size_t space_index(const DpInstance& inst, const Preorder& space) {
  std::size_t found = FiniteCategory::npos;
  for (std::size_t o = 0; o < inst.spaces.size(); ++o) {
    if (inst.spaces[o].second == space) {
      if (found != FiniteCategory::npos) throw Error("space occurs as more than one object");
      found = o;
    }
  }
  if (found == FiniteCategory::npos) throw Error("space is not an object of the instance");
  return found;
}

/// Curries a concrete norphism into the kernel representation: the banned
/// vector over the hom-set is its ban verdict on each enumerated problem.
inline NorphismGeneric wrap_norphism(const DpInstance& inst, const NorphismDP& n) {
  const std::size_t a = space_index(inst, n.dom());
  const std::size_t b = space_index(inst, n.cod());
  const auto& hom = inst.cat.hom(a, b);
  std::vector<std::uint8_t> banned(hom.size(), 0);
  for (std::size_t i = 0; i < hom.size(); ++i) {
    banned[i] = bans(n, inst.values[hom[i]]) ? 1 : 0;
  }
  return make_generic_norphism(inst.cat, a, b, std::move(banned));
}

/// Recovers the cell relation of a wrapped norphism. Each banned cell
/// (p, q) is observable as the ban verdict on the problem generated by
/// closing that single cell, so wrap and unwrap are mutually inverse on
/// norphisms produced by wrap_norphism.
inline std::vector<std::uint8_t> unwrap_banned(const DpInstance& inst, const NorphismGeneric& n) {
  const Preorder& dom = inst.spaces[n.dom].second;
  const Preorder& cod = inst.spaces[n.cod].second;
  const auto& hom = inst.cat.hom(n.dom, n.cod);
  std::vector<std::uint8_t> rel(dom.size() * cod.size(), 0);
  for (std::size_t p = 0; p < dom.size(); ++p) {
    for (std::size_t q = 0; q < cod.size(); ++q) {
      std::vector<std::uint8_t> cell(dom.size() * cod.size(), 0);
      cell[p * cod.size() + q] = 1;
      const auto probe = monotone_close(dom, cod, cell);
      for (std::size_t i = 0; i < hom.size(); ++i) {
        if (inst.values[hom[i]].rel_matrix() == probe) {
          rel[p * cod.size() + q] = n.banned[i];
          break;
        }
      }
    }
  }
  return rel;
}

/// The default inexact rules of this instance, routed through the
/// concrete propagate operation instead of composite lookups. Agrees
/// with the exact rules on every wrapped norphism. The returned closures
/// borrow `inst`, which must outlive them.
inline InexactRules dp_rules(const DpInstance& inst) {
  InexactRules rules;
  rules.left = [&inst](const FiniteCategory&, std::size_t f, const NorphismGeneric& n) {
    NorphismDP concrete = NorphismDP::from_rel(inst.spaces[n.dom].second,
                                               inst.spaces[n.cod].second, unwrap_banned(inst, n));
    return wrap_norphism(inst, propagate(concrete, inst.values[f], Side::pre));
  };
  rules.right = [&inst](const FiniteCategory&, const NorphismGeneric& n, std::size_t g) {
    NorphismDP concrete = NorphismDP::from_rel(inst.spaces[n.dom].second,
                                               inst.spaces[n.cod].second, unwrap_banned(inst, n));
    return wrap_norphism(inst, propagate(concrete, inst.values[g], Side::post));
  };
  return rules;
}

}  // namespace norph
