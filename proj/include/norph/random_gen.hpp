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
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "norph/dp.hpp"
#include "norph/metric.hpp"
#include "norph/norphism.hpp"
#include "norph/poset.hpp"
#include "norph/rational.hpp"

namespace norph {

/// Seeded generators for randomized suites. Raw engine output is reduced
/// directly so a given seed produces the same values on every platform.

inline std::size_t random_below(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

inline bool random_chance(std::mt19937_64& rng, std::uint64_t percent) {
  return rng() % 100 < percent;
}

/// A random preorder: acyclic cover pairs between index-ordered elements,
/// then closure. Element names have the given prefix.
inline Preorder random_preorder(std::mt19937_64& rng, std::size_t size,
                                const std::string& prefix = "e") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.push_back(prefix + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (random_chance(rng, 40)) covers.push_back({names[i], names[j]});
    }
  }
  return Preorder::from_hasse(std::move(names), covers);
}

/// A random valid design problem: Bernoulli seed cells, then closure.
inline DesignProblem random_dp(std::mt19937_64& rng, const Preorder& dom, const Preorder& cod) {
  std::vector<std::uint8_t> seed(dom.size() * cod.size(), 0);
  for (auto& cell : seed) cell = random_chance(rng, 35) ? 1 : 0;
  return DesignProblem::from_rel(dom, cod, std::move(seed), true);
}

/// A random valid norphism: Bernoulli seed cells, then twisted closure.
inline NorphismDP random_norphism(std::mt19937_64& rng, const Preorder& dom, const Preorder& cod) {
  std::vector<std::uint8_t> seed(dom.size() * cod.size(), 0);
  for (auto& cell : seed) cell = random_chance(rng, 35) ? 1 : 0;
  return NorphismDP::from_rel(dom, cod, std::move(seed), true);
}

/// A random digraph with integer weights in [1, 9]. Edge count is about
/// twice the node count; duplicates are allowed.
inline WeightedDigraph random_digraph(std::mt19937_64& rng, std::size_t nodes,
                                      const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nodes; ++i) names.push_back(prefix + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  const std::size_t count = 2 * nodes;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t src = random_below(rng, nodes);
    const std::size_t dst = random_below(rng, nodes);
    if (src == dst) continue;
    edges.push_back({names[src], names[dst], Rat(1 + static_cast<long long>(random_below(rng, 9)))});
  }
  return WeightedDigraph::make(std::move(names), edges);
}

}  // namespace norph
