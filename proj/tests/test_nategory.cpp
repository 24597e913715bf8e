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

#include "norph/nategory.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "norph/dp_instance.hpp"

namespace norph {
namespace {

constexpr std::size_t kNone = FiniteCategory::npos;

// One object x, morphisms id, a, b. Composition projects onto the left
// factor away from the identity: a;a = a;b = a and b;a = b;b = b.
FiniteCategory left_zero_monoid() {
  return FiniteCategory::build({"x"}, {{"id", 0, 0}, {"a", 0, 0}, {"b", 0, 0}}, {0},
                               {0, 1, 2, 1, 1, 1, 2, 2, 2});
}

// Objects a, b with a single non-identity arrow f : a -> b.
FiniteCategory walking_arrow() {
  return FiniteCategory::build({"a", "b"}, {{"ida", 0, 0}, {"idb", 1, 1}, {"f", 0, 1}}, {0, 1},
                               {0, kNone, 2, kNone, 1, kNone, kNone, 2, kNone});
}

TEST_CASE("valid tables build and compose by lookup", "[nategory]") {
  const auto cat = left_zero_monoid();
  CHECK(cat.object_count() == 1);
  CHECK(cat.morphism_count() == 3);
  CHECK(cat.compose(cat.morphism_index("a"), cat.morphism_index("b")) == cat.morphism_index("a"));
  CHECK(cat.compose(cat.morphism_index("b"), cat.morphism_index("a")) == cat.morphism_index("b"));

  const auto arrow = walking_arrow();
  CHECK(arrow.hom(0, 1).size() == 1);
  CHECK(arrow.hom(1, 0).empty());
  CHECK(arrow.compose(arrow.identity(0), arrow.morphism_index("f")) == arrow.morphism_index("f"));
  CHECK_THROWS_WITH(arrow.compose(arrow.morphism_index("f"), arrow.morphism_index("ida")),
                    Catch::Matchers::ContainsSubstring("not composable"));
}

TEST_CASE("build rejects a broken associativity table and names the triple", "[nategory]") {
  // Same monoid with a;a redirected to b.
  CHECK_THROWS_WITH(FiniteCategory::build({"x"}, {{"id", 0, 0}, {"a", 0, 0}, {"b", 0, 0}}, {0},
                                          {0, 1, 2, 1, 2, 1, 2, 2, 2}),
                    Catch::Matchers::ContainsSubstring("associativity") &&
                        Catch::Matchers::ContainsSubstring("('a', 'a', 'a')"));
}

TEST_CASE("build rejects broken unit laws and names the morphism", "[nategory]") {
  CHECK_THROWS_WITH(FiniteCategory::build({"x"}, {{"id", 0, 0}, {"a", 0, 0}, {"b", 0, 0}}, {0},
                                          {0, 2, 2, 1, 1, 1, 2, 2, 2}),
                    Catch::Matchers::ContainsSubstring("left unit") &&
                        Catch::Matchers::ContainsSubstring("'a'"));
  CHECK_THROWS_WITH(FiniteCategory::build({"x"}, {{"id", 0, 0}, {"a", 0, 0}, {"b", 0, 0}}, {0},
                                          {0, 1, 2, 2, 1, 1, 2, 2, 2}),
                    Catch::Matchers::ContainsSubstring("right unit") &&
                        Catch::Matchers::ContainsSubstring("'a'"));
}

TEST_CASE("build rejects malformed tables", "[nategory]") {
  using M = FiniteCategory::Morphism;
  const std::vector<M> arrow = {{"ida", 0, 0}, {"idb", 1, 1}, {"f", 0, 1}};
  // Composite entered for a non-composable pair.
  CHECK_THROWS_WITH(
      FiniteCategory::build({"a", "b"}, arrow, {0, 1},
                            {0, kNone, 2, kNone, 1, kNone, 2, 2, kNone}),
      Catch::Matchers::ContainsSubstring("non-composable"));
  // Composite missing for a composable pair.
  CHECK_THROWS_WITH(
      FiniteCategory::build({"a", "b"}, arrow, {0, 1},
                            {0, kNone, kNone, kNone, 1, kNone, kNone, 2, kNone}),
      Catch::Matchers::ContainsSubstring("missing"));
  // Composite with the wrong endpoints: ida;f resolved to ida.
  CHECK_THROWS_WITH(
      FiniteCategory::build({"a", "b"}, arrow, {0, 1},
                            {0, kNone, 0, kNone, 1, kNone, kNone, 2, kNone}),
      Catch::Matchers::ContainsSubstring("ill-typed"));
  CHECK_THROWS_WITH(FiniteCategory::build({"a"}, {{"id", 0, 0}, {"id", 0, 0}}, {0},
                                          {0, 0, 0, 0}),
                    Catch::Matchers::ContainsSubstring("duplicate"));
  CHECK_THROWS_WITH(FiniteCategory::build({"a"}, {{"id", 0, 1}}, {0}, {0}),
                    Catch::Matchers::ContainsSubstring("dangling"));
  // Identity pointing at a non-endomorphism.
  CHECK_THROWS_WITH(FiniteCategory::build({"a", "b"}, arrow, {2, 1},
                                          {0, kNone, 2, kNone, 1, kNone, kNone, 2, kNone}),
                    Catch::Matchers::ContainsSubstring("endomorphism"));
}

TEST_CASE("hom-orders validate their axioms", "[nategory]") {
  const auto cat = left_zero_monoid();
  const auto discrete = HomPreorder::discrete(cat);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(discrete.leq(i, j) == (i == j));
  }
  CHECK_THROWS_WITH(HomPreorder::from_leq(cat, {0, 0, 0, 0, 1, 0, 0, 0, 1}),
                    Catch::Matchers::ContainsSubstring("reflexive"));
  // id <= a and a <= b but the outer pair is missing.
  CHECK_THROWS_WITH(HomPreorder::from_leq(cat, {1, 1, 0, 0, 1, 1, 0, 0, 1}),
                    Catch::Matchers::ContainsSubstring("transitive"));
  const auto arrow = walking_arrow();
  // Relating ida to f crosses hom-sets.
  CHECK_THROWS_WITH(HomPreorder::from_leq(arrow, {1, 0, 1, 0, 1, 0, 0, 0, 1}),
                    Catch::Matchers::ContainsSubstring("non-parallel"));
}

TEST_CASE("incompatibility reads the banned vector", "[nategory]") {
  const auto cat = left_zero_monoid();
  const auto n = make_generic_norphism(cat, 0, 0, {0, 1, 0});
  CHECK_FALSE(incompatibility(cat, n, cat.morphism_index("id")));
  CHECK(incompatibility(cat, n, cat.morphism_index("a")));
  CHECK_THROWS_AS(make_generic_norphism(cat, 0, 0, {0, 1}), Error);

  const auto arrow = walking_arrow();
  const auto z = zero_norphism(arrow, 0, 1);
  CHECK_FALSE(incompatibility(arrow, z, arrow.morphism_index("f")));
  CHECK_THROWS_WITH(incompatibility(arrow, z, arrow.morphism_index("ida")),
                    Catch::Matchers::ContainsSubstring("not in the norphism's hom-set"));
}

TEST_CASE("inexact composition checks endpoints", "[nategory]") {
  const auto arrow = walking_arrow();
  const auto n = make_generic_norphism(arrow, 0, 1, {1});
  CHECK_THROWS_AS(inexact_compose(arrow, arrow.morphism_index("idb"), n, CompSide::left), Error);
  CHECK_THROWS_AS(inexact_compose(arrow, arrow.morphism_index("ida"), n, CompSide::right), Error);
  // ida on the left and idb on the right keep the ban in place.
  CHECK(inexact_compose(arrow, arrow.morphism_index("ida"), n, CompSide::left).banned ==
        std::vector<std::uint8_t>{1});
  CHECK(inexact_compose(arrow, arrow.morphism_index("idb"), n, CompSide::right).banned ==
        std::vector<std::uint8_t>{1});
}

TEST_CASE("exact rules on the monoid match hand-computed vectors", "[nategory]") {
  const auto cat = left_zero_monoid();
  const auto n = make_generic_norphism(cat, 0, 0, {0, 1, 0});
  using V = std::vector<std::uint8_t>;
  // hom(x, x) is ordered id, a, b.
  CHECK(inexact_compose(cat, cat.morphism_index("id"), n, CompSide::left).banned == V{0, 1, 0});
  CHECK(inexact_compose(cat, cat.morphism_index("a"), n, CompSide::left).banned == V{1, 1, 1});
  CHECK(inexact_compose(cat, cat.morphism_index("b"), n, CompSide::left).banned == V{0, 0, 0});
  CHECK(inexact_compose(cat, cat.morphism_index("id"), n, CompSide::right).banned == V{0, 1, 0});
  CHECK(inexact_compose(cat, cat.morphism_index("a"), n, CompSide::right).banned == V{1, 1, 0});
  CHECK(inexact_compose(cat, cat.morphism_index("b"), n, CompSide::right).banned == V{0, 1, 0});
}

TEST_CASE("exact rules pass the equivariance check", "[nategory]") {
  const auto cat = left_zero_monoid();
  std::vector<NorphismGeneric> ns;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    ns.push_back(make_generic_norphism(
        cat, 0, 0, {std::uint8_t(mask & 1), std::uint8_t((mask >> 1) & 1),
                    std::uint8_t((mask >> 2) & 1)}));
  }
  const auto report = check_equivariance(cat, ns, exact_rules());
  CHECK(report.violations.empty());
  CHECK(report.exact);
  CHECK(report.checked == ns.size() * 18);
}

TEST_CASE("a rule that invents bans is flagged as a violation", "[nategory]") {
  const auto cat = left_zero_monoid();
  const auto n = make_generic_norphism(cat, 0, 0, {0, 1, 0});
  InexactRules spurious = exact_rules();
  spurious.left = [](const FiniteCategory& c, std::size_t f, const NorphismGeneric& m) {
    auto out = exact_rules().left(c, f, m);
    out.banned[0] = 1;
    return out;
  };
  const auto report = check_equivariance(cat, {n}, spurious);
  // The invented ban on the identity is unjustified after id and after b.
  REQUIRE(report.violations.size() == 2);
  for (const auto& v : report.violations) CHECK(v.condition == "left-ban-not-implied");
  CHECK_FALSE(report.exact);
}

TEST_CASE("a rule that drops bans passes but is not exact", "[nategory]") {
  const auto cat = left_zero_monoid();
  const auto n = make_generic_norphism(cat, 0, 0, {0, 1, 0});
  InexactRules dropped = exact_rules();
  dropped.left = [](const FiniteCategory& c, std::size_t f, const NorphismGeneric& m) {
    return zero_norphism(c, c.morphism(f).cod, m.cod);
  };
  const auto report = check_equivariance(cat, {n}, dropped);
  CHECK(report.violations.empty());
  CHECK_FALSE(report.exact);
}

TEST_CASE("the equivariance report matches a direct recount", "[nategory]") {
  const auto cat = left_zero_monoid();
  const auto n = make_generic_norphism(cat, 0, 0, {0, 1, 0});
  InexactRules noisy = exact_rules();
  noisy.left = [](const FiniteCategory& c, std::size_t f, const NorphismGeneric& m) {
    auto out = exact_rules().left(c, f, m);
    out.banned[2] = 1;
    return out;
  };
  const auto report = check_equivariance(cat, {n}, noisy);

  // Count directly over every composable pair through the norphism's
  // endpoints: a flagged ban must be a real ban of the composite.
  std::size_t expected = 0;
  for (std::size_t f : cat.hom(0, 0)) {
    const auto out = noisy.left(cat, f, n);
    const auto& hom = cat.hom(0, 0);
    for (std::size_t i = 0; i < hom.size(); ++i) {
      if (out.banned[i] && !incompatibility(cat, n, cat.compose(f, hom[i]))) ++expected;
    }
  }
  REQUIRE(expected > 0);
  CHECK(report.violations.size() == expected);
  for (const auto& v : report.violations) {
    CHECK(incompatibility(cat, noisy.left(cat, v.f, n), v.g));
    CHECK_FALSE(incompatibility(cat, n, cat.compose(v.f, v.g)));
  }
}

TEST_CASE("expansiveness holds for upward-closed bans only", "[nategory]") {
  const auto cat = left_zero_monoid();
  // Order a <= b inside hom(x, x).
  const auto order = HomPreorder::from_leq(cat, {1, 0, 0, 0, 1, 1, 0, 0, 1});
  CHECK(check_expansiveness(cat, order, make_generic_norphism(cat, 0, 0, {0, 1, 1})));
  CHECK(check_expansiveness(cat, order, make_generic_norphism(cat, 0, 0, {0, 0, 1})));
  CHECK_FALSE(check_expansiveness(cat, order, make_generic_norphism(cat, 0, 0, {0, 1, 0})));
  // Every ban is upward-closed in the discrete order.
  const auto discrete = HomPreorder::discrete(cat);
  for (std::size_t mask = 0; mask < 8; ++mask) {
    const auto n = make_generic_norphism(
        cat, 0, 0, {std::uint8_t(mask & 1), std::uint8_t((mask >> 1) & 1),
                    std::uint8_t((mask >> 2) & 1)});
    CHECK(check_expansiveness(cat, discrete, n));
  }
}

TEST_CASE("composition is monotone for compatible orders only", "[nategory]") {
  const auto cat = left_zero_monoid();
  CHECK(check_monotone_homs(cat, HomPreorder::discrete(cat)));
  CHECK(check_monotone_homs(cat, HomPreorder::from_leq(cat, {1, 0, 0, 0, 1, 1, 0, 0, 1})));
  // id <= a breaks on the right: b;id = b is not below b;a = b... it is.
  // It breaks on the left instead: id;b = b is not below a;b = a.
  CHECK_FALSE(check_monotone_homs(cat, HomPreorder::from_leq(cat, {1, 1, 0, 0, 1, 0, 0, 0, 1})));
}

TEST_CASE("witnesses compose when the order is monotone", "[nategory]") {
  const auto cat = left_zero_monoid();
  const auto order = HomPreorder::from_leq(cat, {1, 0, 0, 0, 1, 1, 0, 0, 1});
  const auto w = make_witness(cat, order, cat.morphism_index("a"), cat.morphism_index("b"));
  const auto ww = compose_witness(cat, order, w, w);
  // a;a = a and b;b = b, so the composite witness is the original.
  CHECK(ww.lo == cat.morphism_index("a"));
  CHECK(ww.hi == cat.morphism_index("b"));
  CHECK_THROWS_WITH(make_witness(cat, order, cat.morphism_index("b"), cat.morphism_index("a")),
                    Catch::Matchers::ContainsSubstring("not below"));
  const auto arrow = walking_arrow();
  CHECK_THROWS_WITH(make_witness(arrow, HomPreorder::discrete(arrow),
                                 arrow.morphism_index("ida"), arrow.morphism_index("f")),
                    Catch::Matchers::ContainsSubstring("not parallel"));
}

TEST_CASE("witness composition surfaces monotonicity failures", "[nategory]") {
  const auto inst = make_dp_instance({{"P", Preorder::bool2()}});
  const std::size_t id_m = inst.cat.identity(0);
  std::size_t zero_m = FiniteCategory::npos;
  std::size_t ones_m = FiniteCategory::npos;
  for (std::size_t m = 0; m < inst.cat.morphism_count(); ++m) {
    if (inst.values[m].true_count() == 0) zero_m = m;
    if (inst.values[m].true_count() == 4) ones_m = m;
  }
  REQUIRE(zero_m != FiniteCategory::npos);
  REQUIRE(ones_m != FiniteCategory::npos);

  // Inverted order: the identity below the empty problem.
  std::vector<std::uint8_t> leq(inst.cat.morphism_count() * inst.cat.morphism_count(), 0);
  for (std::size_t m = 0; m < inst.cat.morphism_count(); ++m) {
    leq[m * inst.cat.morphism_count() + m] = 1;
  }
  leq[id_m * inst.cat.morphism_count() + zero_m] = 1;
  const auto inverted = HomPreorder::from_leq(inst.cat, leq);
  CHECK_FALSE(check_monotone_homs(inst.cat, inverted));

  const auto w1 = make_witness(inst.cat, inverted, id_m, zero_m);
  const auto w2 = make_witness(inst.cat, inverted, ones_m, ones_m);
  // id;ones = ones does not sit below zero;ones = zero.
  CHECK_THROWS_WITH(compose_witness(inst.cat, inverted, w1, w2),
                    Catch::Matchers::ContainsSubstring("monotonicity violation"));
}

TEST_CASE("the instance over small spaces satisfies every axiom", "[nategory]") {
  const auto inst = make_dp_instance({{"one", Preorder::unit()}, {"P", Preorder::bool2()}});
  CHECK(inst.cat.object_count() == 2);
  CHECK(inst.cat.morphism_count() == 14);
  CHECK(inst.cat.hom(1, 1).size() == 6);
  CHECK(inst.cat.hom(1, 0).size() == 3);
  CHECK(inst.cat.hom(0, 0).size() == 2);
  CHECK(check_monotone_homs(inst.cat, inst.order));
  // Composition in the category is composition of the stored problems.
  for (std::size_t f = 0; f < inst.cat.morphism_count(); ++f) {
    for (std::size_t g = 0; g < inst.cat.morphism_count(); ++g) {
      if (inst.cat.morphism(f).cod != inst.cat.morphism(g).dom) continue;
      CHECK(inst.values[inst.cat.compose(f, g)] == compose(inst.values[f], inst.values[g]));
    }
  }
}

TEST_CASE("wrapping a concrete norphism preserves its verdicts", "[nategory]") {
  const auto c2 = Preorder::bool2();
  const auto inst = make_dp_instance({{"P", c2}});
  for (const auto& n : enumerate_norphisms(c2, c2)) {
    const auto wrapped = wrap_norphism(inst, n);
    const auto& hom = inst.cat.hom(wrapped.dom, wrapped.cod);
    for (std::size_t i = 0; i < hom.size(); ++i) {
      CHECK((wrapped.banned[i] != 0) == bans(n, inst.values[hom[i]]));
    }
    CHECK(unwrap_banned(inst, wrapped) == n.rel_matrix());
  }
}

TEST_CASE("instance rules agree with the exact rules", "[nategory]") {
  const auto c2 = Preorder::bool2();
  const auto inst = make_dp_instance({{"P", c2}});
  const auto exact = exact_rules();
  const auto routed = dp_rules(inst);
  for (const auto& n : enumerate_norphisms(c2, c2)) {
    const auto wrapped = wrap_norphism(inst, n);
    for (std::size_t m = 0; m < inst.cat.morphism_count(); ++m) {
      const auto via_exact_l = exact.left(inst.cat, m, wrapped);
      const auto via_routed_l = routed.left(inst.cat, m, wrapped);
      CHECK(via_exact_l.banned == via_routed_l.banned);
      const auto via_exact_r = exact.right(inst.cat, wrapped, m);
      const auto via_routed_r = routed.right(inst.cat, wrapped, m);
      CHECK(via_exact_r.banned == via_routed_r.banned);
    }
  }
}

TEST_CASE("wrapped norphisms are equivariant under the instance rules", "[nategory]") {
  const auto c2 = Preorder::bool2();
  const auto inst = make_dp_instance({{"one", Preorder::unit()}, {"P", c2}});
  std::vector<NorphismGeneric> wrapped;
  for (const auto& n : enumerate_norphisms(c2, c2)) wrapped.push_back(wrap_norphism(inst, n));
  for (const auto& n : enumerate_norphisms(c2, Preorder::unit())) {
    wrapped.push_back(wrap_norphism(inst, n));
  }
  const auto report = check_equivariance(inst.cat, wrapped, dp_rules(inst));
  CHECK(report.violations.empty());
  CHECK(report.exact);
  CHECK(report.checked > 0);
}

TEST_CASE("space lookup flags ambiguity and misses", "[nategory]") {
  const auto c2 = Preorder::bool2();
  const auto inst = make_dp_instance({{"P", c2}});
  CHECK(space_index(inst, c2) == 0);
  CHECK_THROWS_AS(space_index(inst, Preorder::chain(3)), Error);
  const auto twin = make_dp_instance({{"A", Preorder::unit()}, {"B", Preorder::unit()}});
  CHECK_THROWS_WITH(space_index(twin, Preorder::unit()),
                    Catch::Matchers::ContainsSubstring("more than one"));
}

}  // namespace
}  // namespace norph
