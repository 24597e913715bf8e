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

#include "norph/norphism.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <vector>

#include "norph/random_gen.hpp"

namespace norph {
namespace {

using Cells = std::vector<std::uint8_t>;

Preorder diamond() {
  return Preorder::from_hasse({"bot", "l", "r", "top"},
                              {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
}

TEST_CASE("construction rejects relations that are not closed", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  // Banned for the small functionality but not for the large one.
  CHECK_THROWS_WITH(NorphismDP::from_rel(c2, c2, {1, 0, 0, 0}),
                    Catch::Matchers::ContainsSubstring("domain axis"));
  // Banned with the large budget but not with the small one.
  CHECK_THROWS_WITH(NorphismDP::from_rel(c2, c2, {0, 1, 0, 1}),
                    Catch::Matchers::ContainsSubstring("codomain axis"));
  // Autoclose spreads the seed cell the opposite way from feasibility.
  const auto n = NorphismDP::from_rel(c2, c2, {1, 0, 0, 0}, true);
  CHECK(n.rel_matrix() == Cells{1, 0, 1, 0});
}

TEST_CASE("enumeration finds six norphisms on the two-chain", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const auto all = enumerate_norphisms(c2, c2);
  CHECK(all.size() == 6);
  for (const auto& n : all) CHECK_NOTHROW(validate(n));
  // The valid masks mirror the valid problems under the order flip.
  CHECK(enumerate_norphisms(c2, Preorder::unit()).size() == 3);
  CHECK(enumerate_norphisms(Preorder::unit(), Preorder::unit()).size() == 2);
}

TEST_CASE("a performance pair bans exactly its rectangle", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const auto f = FunctionalityVector::close_seed(c2, {"1"});
  const auto r = ResourceCovector::close_seed(c2, {"0"});
  const auto n = performance_norphism(f, r);
  CHECK(n.rel_matrix() == Cells{0, 0, 1, 0});
  CHECK_NOTHROW(validate(n));

  CHECK_FALSE(bans(n, DesignProblem::identity(c2)));
  CHECK(bans(n, DesignProblem::from_rel(c2, c2, {1, 1, 1, 1})));
  // Of the six problems only the all-feasible one claims the banned cell.
  const auto hit = banned_set(n);
  REQUIRE(hit.size() == 1);
  CHECK(hit[0].rel_matrix() == Cells{1, 1, 1, 1});
}

TEST_CASE("the zero norphism bans nothing", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const auto z = NorphismDP::zero(c2, c2);
  for (const auto& m : enumerate_design_problems(c2, c2)) CHECK_FALSE(bans(z, m));
  CHECK(banned_set(z).empty());
}

TEST_CASE("join pools the banned cells of both sides", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const auto a = NorphismDP::from_rel(c2, c2, {1, 0, 1, 0});
  const auto b = NorphismDP::from_rel(c2, c2, {0, 0, 1, 1});
  const auto j = join(a, b);
  CHECK(j.rel_matrix() == Cells{1, 0, 1, 1});
  for (const auto& m : enumerate_design_problems(c2, c2)) {
    CHECK(bans(j, m) == (bans(a, m) || bans(b, m)));
  }
  CHECK_THROWS_AS(join(a, NorphismDP::zero(c2, Preorder::unit())), Error);
}

TEST_CASE("propagation is exact on the two-chain", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const auto problems = enumerate_design_problems(c2, c2);
  for (const auto& n : enumerate_norphisms(c2, c2)) {
    for (const auto& e : problems) {
      const auto pre = propagate(n, e, Side::pre);
      const auto post = propagate(n, e, Side::post);
      CHECK_NOTHROW(validate(pre));
      CHECK_NOTHROW(validate(post));
      for (const auto& m : problems) {
        CHECK(bans(pre, m) == bans(n, compose(e, m)));
        CHECK(bans(post, m) == bans(n, compose(m, e)));
      }
    }
  }
}

TEST_CASE("propagation is exact across mixed spaces", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const Preorder c3 = Preorder::chain(3);
  for (const auto& n : enumerate_norphisms(c2, c2)) {
    for (const auto& e : enumerate_design_problems(c2, c3)) {
      const auto pre = propagate(n, e, Side::pre);
      CHECK(pre.dom() == c3);
      for (const auto& m : enumerate_design_problems(c3, c2)) {
        CHECK(bans(pre, m) == bans(n, compose(e, m)));
      }
    }
    for (const auto& g : enumerate_design_problems(c3, c2)) {
      const auto post = propagate(n, g, Side::post);
      CHECK(post.cod() == c3);
      for (const auto& m : enumerate_design_problems(c2, c3)) {
        CHECK(bans(post, m) == bans(n, compose(m, g)));
      }
    }
  }
}

TEST_CASE("propagation validates endpoints", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const Preorder c3 = Preorder::chain(3);
  const auto n = NorphismDP::zero(c2, c2);
  const auto e = DesignProblem::identity(c3);
  CHECK_THROWS_WITH(propagate(n, e, Side::pre), Catch::Matchers::ContainsSubstring("pre"));
  CHECK_THROWS_WITH(propagate(n, e, Side::post), Catch::Matchers::ContainsSubstring("post"));
}

TEST_CASE("propagation preserves closure on random inputs", "[norphism]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Preorder p = random_preorder(rng, 2 + random_below(rng, 3), "p");
    const Preorder q = random_preorder(rng, 2 + random_below(rng, 3), "q");
    const Preorder r = random_preorder(rng, 2 + random_below(rng, 3), "r");
    const auto n = random_norphism(rng, p, q);
    CHECK_NOTHROW(validate(propagate(n, random_dp(rng, p, r), Side::pre)));
    CHECK_NOTHROW(validate(propagate(n, random_dp(rng, r, q), Side::post)));
  }
}

TEST_CASE("the resource-limit schema never bans the identity", "[norphism]") {
  for (const auto& space : {Preorder::unit(), Preorder::bool2(), Preorder::chain(3), diamond()}) {
    const auto pools = enumerate_closed_sets(space, Direction::down);
    std::vector<ResourceCovector> covs;
    for (const auto& s : pools) {
      covs.push_back(ResourceCovector::from_membership(space, s.membership()));
    }
    const auto n = resource_limit_schema(space, covs);
    CHECK_NOTHROW(validate(n));
    CHECK_FALSE(bans(n, DesignProblem::identity(space)));
  }
}

TEST_CASE("the resource-limit schema bans crossings out of a pool", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const auto pool = ResourceCovector::close_seed(c2, {"0"});
  const auto n = resource_limit_schema(c2, {pool});
  // Only "1 delivered from pool member 0" crosses the boundary.
  CHECK(n.rel_matrix() == Cells{0, 0, 1, 0});
  // A problem claiming to turn the small budget into the large
  // functionality is banned.
  CHECK(bans(n, DesignProblem::from_rel(c2, c2, {1, 1, 1, 1})));
  CHECK_FALSE(bans(n, DesignProblem::identity(c2)));
  CHECK_THROWS_AS(resource_limit_schema(c2, {ResourceCovector::close_seed(Preorder::chain(3),
                                                                          {"c0"})}),
                  Error);
}

TEST_CASE("decomposition regenerates the norphism as a join of pairs", "[norphism]") {
  const Preorder c2 = Preorder::bool2();
  const Preorder d4 = diamond();
  std::mt19937_64 rng(17);
  std::vector<NorphismDP> samples = {NorphismDP::zero(c2, c2)};
  for (const auto& n : enumerate_norphisms(c2, c2)) samples.push_back(n);
  for (int trial = 0; trial < 20; ++trial) samples.push_back(random_norphism(rng, d4, c2));
  for (const auto& n : samples) {
    auto rebuilt = NorphismDP::zero(n.dom(), n.cod());
    for (const auto& part : decompose(n)) {
      rebuilt = join(rebuilt, performance_norphism(part.f, part.r));
    }
    CHECK(rebuilt == n);
  }
}

TEST_CASE("enumeration refuses oversized grids", "[norphism]") {
  CHECK_THROWS_WITH(enumerate_norphisms(Preorder::chain(5), Preorder::chain(4)),
                    Catch::Matchers::ContainsSubstring("cap"));
  CHECK_THROWS_WITH(banned_set(NorphismDP::zero(Preorder::chain(5), Preorder::chain(4))),
                    Catch::Matchers::ContainsSubstring("cap"));
}

}  // namespace
}  // namespace norph
