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

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "norph/common.hpp"
#include "norph/dp.hpp"
#include "norph/dp_instance.hpp"
#include "norph/metric.hpp"
#include "norph/nategory.hpp"
#include "norph/norphism.hpp"
#include "norph/problem_file.hpp"
#include "norph/random_gen.hpp"

namespace norph {

struct VerifyOptions {
  std::size_t cell_cap = 16;
  std::size_t trials = 25;
  std::uint64_t seed = 0;
};

/// Violations are data: the report lists each broken fact in prose, and
/// `checks` records one verdict per suite that ran.
struct VerifyReport {
  std::map<std::string, bool> checks;
  std::vector<std::string> violations;
  std::size_t checked = 0;
  bool exact = true;
};

namespace detail {

/// Builds the instance over one or two named posets from the file,
/// memoized by the pair. Oversized hom-sets surface as cap errors.
class InstanceCache {
 public:
  InstanceCache(const ProblemFile& file, std::size_t cell_cap)
      : file_(file), cell_cap_(cell_cap) {}

  const DpInstance& get(const std::string& dom, const std::string& cod) {
    const std::string key = dom + "\x1f" + cod;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<std::pair<std::string, Preorder>> spaces;
    spaces.push_back({dom, file_.posets.at(dom)});
    if (cod != dom) spaces.push_back({cod, file_.posets.at(cod)});
    auto [pos, inserted] = cache_.emplace(key, make_dp_instance(std::move(spaces), cell_cap_));
    return pos->second;
  }

 private:
  const ProblemFile& file_;
  std::size_t cell_cap_;
  std::map<std::string, DpInstance> cache_;
};

inline void suite_axioms(const ProblemFile& file, const VerifyOptions& opts,
                         VerifyReport& report) {
  std::size_t failures = 0;
  auto flag = [&](const std::string& message) {
    report.violations.push_back(message);
    ++failures;
  };

  for (const auto& [name, entry] : file.dps) {
    ++report.checked;
    try {
      validate(entry.value);
    } catch (const Error& e) {
      flag("dp '" + name + "': " + e.what());
    }
  }
  for (const auto& [name, entry] : file.norphisms) {
    ++report.checked;
    try {
      validate(entry.value);
    } catch (const Error& e) {
      flag("norphism '" + name + "': " + e.what());
    }
  }
  for (const auto& [name, entry] : file.vectors) {
    ++report.checked;
    if (!check_closed(entry.value.space(), entry.value.values(), Direction::up)) {
      flag("vector '" + name + "': not upward-closed");
    }
  }
  for (const auto& [name, entry] : file.covectors) {
    ++report.checked;
    if (!check_closed(entry.value.space(), entry.value.values(), Direction::down)) {
      flag("covector '" + name + "': not downward-closed");
    }
  }
  for (const auto& [name, entry] : file.bounds) {
    ++report.checked;
    if (!check_sound(file.graphs.at(entry.graph), entry.value)) {
      flag("bound '" + name + "': overestimates the shortest distance on its pair");
    }
  }

  // Category axioms over the file's posets, when every pairwise cell
  // count fits the cap.
  std::vector<std::pair<std::string, Preorder>> spaces;
  for (const auto& [name, p] : file.posets) {
    bool fits = true;
    for (const auto& [other_name, other] : file.posets) {
      if (p.size() * other.size() > opts.cell_cap) fits = false;
    }
    if (fits) spaces.push_back({name, p});
  }
  if (!spaces.empty()) {
    try {
      const DpInstance inst = make_dp_instance(spaces, opts.cell_cap);
      const std::size_t nm = inst.cat.morphism_count();
      for (std::size_t f = 0; f < nm; ++f) {
        const auto& mf = inst.cat.morphism(f);
        ++report.checked;
        if (inst.cat.compose(inst.cat.identity(mf.dom), f) != f ||
            inst.cat.compose(f, inst.cat.identity(mf.cod)) != f) {
          flag("unit law fails for '" + mf.name + "'");
        }
        for (std::size_t g = 0; g < nm; ++g) {
          if (mf.cod != inst.cat.morphism(g).dom) continue;
          for (std::size_t h = 0; h < nm; ++h) {
            if (inst.cat.morphism(g).cod != inst.cat.morphism(h).dom) continue;
            ++report.checked;
            if (inst.cat.compose(inst.cat.compose(f, g), h) !=
                inst.cat.compose(f, inst.cat.compose(g, h))) {
              flag("associativity fails on ('" + mf.name + "', '" + inst.cat.morphism(g).name +
                   "', '" + inst.cat.morphism(h).name + "')");
            }
          }
        }
      }
      ++report.checked;
      if (!check_monotone_homs(inst.cat, inst.order)) {
        flag("composition is not monotone under the pointwise hom-order");
      }
    } catch (const Error& e) {
      flag(std::string("instance construction failed: ") + e.what());
    }
  }

  // Seeded random trials at poset sizes 3 and 4.
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const Preorder a = random_preorder(rng, 3 + random_below(rng, 2), "a");
    const Preorder b = random_preorder(rng, 3 + random_below(rng, 2), "b");
    const Preorder c = random_preorder(rng, 3 + random_below(rng, 2), "c");
    const DesignProblem d = random_dp(rng, a, b);
    const DesignProblem e = random_dp(rng, b, c);
    const DesignProblem f = random_dp(rng, c, a);
    const std::string tag = "random trial " + std::to_string(t);
    ++report.checked;
    try {
      validate(compose(d, e));
      validate(tensor(d, e));
    } catch (const Error& err) {
      flag(tag + ": operation output failed validation: " + err.what());
    }
    if (compose(compose(d, e), f) != compose(d, compose(e, f))) {
      flag(tag + ": associativity fails");
    }
    if (compose(DesignProblem::identity(a), d) != d ||
        compose(d, DesignProblem::identity(b)) != d) {
      flag(tag + ": unit law fails");
    }
  }

  report.checks["axioms"] = failures == 0;
}

inline void suite_equivariance(const ProblemFile& file, const VerifyOptions& opts,
                               VerifyReport& report) {
  std::size_t failures = 0;
  InstanceCache cache(file, opts.cell_cap);
  for (const auto& [name, entry] : file.norphisms) {
    try {
      const DpInstance& inst = cache.get(entry.dom, entry.cod);
      const EquivarianceReport sub =
          check_equivariance(inst.cat, {wrap_norphism(inst, entry.value)}, exact_rules());
      report.checked += sub.checked;
      report.exact = report.exact && sub.exact;
      for (const auto& v : sub.violations) {
        report.violations.push_back("norphism '" + name + "': " + v.condition + " at ('" +
                                    inst.cat.morphism(v.f).name + "', '" +
                                    inst.cat.morphism(v.g).name + "')");
        ++failures;
      }
    } catch (const Error& e) {
      report.violations.push_back("norphism '" + name + "': " + e.what());
      ++failures;
    }
  }
  report.checks["equivariance"] = failures == 0;
}

inline void suite_expansiveness(const ProblemFile& file, const VerifyOptions& opts,
                                VerifyReport& report) {
  std::size_t failures = 0;
  InstanceCache cache(file, opts.cell_cap);
  for (const auto& [name, entry] : file.norphisms) {
    try {
      const DpInstance& inst = cache.get(entry.dom, entry.cod);
      const NorphismGeneric wrapped = wrap_norphism(inst, entry.value);
      const std::size_t hom = inst.cat.hom(wrapped.dom, wrapped.cod).size();
      report.checked += hom * hom;
      if (!check_expansiveness(inst.cat, inst.order, wrapped)) {
        report.violations.push_back("norphism '" + name +
                                    "': banned set is not upward-closed in the hom-order");
        ++failures;
      }
    } catch (const Error& e) {
      report.violations.push_back("norphism '" + name + "': " + e.what());
      ++failures;
    }
  }
  report.checks["expansiveness"] = failures == 0;
}

}  // namespace detail

/// Runs the requested verification suite ("axioms", "equivariance",
/// "expansiveness", or "all") over a loaded problem file.
inline VerifyReport verify_suite(const ProblemFile& file, const std::string& suite,
                                 const VerifyOptions& opts = {}) {
  VerifyReport report;
  bool known = false;
  if (suite == "axioms" || suite == "all") {
    detail::suite_axioms(file, opts, report);
    known = true;
  }
  if (suite == "equivariance" || suite == "all") {
    detail::suite_equivariance(file, opts, report);
    known = true;
  }
  if (suite == "expansiveness" || suite == "all") {
    detail::suite_expansiveness(file, opts, report);
    known = true;
  }
  if (!known) {
    throw Error("unknown suite '" + suite + "' (expected axioms, equivariance, expansiveness, or all)");
  }
  return report;
}

}  // namespace norph
