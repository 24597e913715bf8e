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

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "norph/common.hpp"
#include "norph/dp.hpp"
#include "norph/metric.hpp"
#include "norph/norphism.hpp"
#include "norph/poset.hpp"
#include "norph/rational.hpp"

namespace norph {

/// Entries keep the reference names they were declared with so that
/// serialization can emit them again.
struct VectorEntry {
  std::string space;
  FunctionalityVector value;
};

struct CovectorEntry {
  std::string space;
  ResourceCovector value;
};

struct DpEntry {
  std::string dom;
  std::string cod;
  DesignProblem value;
};

struct NorphismEntry {
  std::string dom;
  std::string cod;
  NorphismDP value;
};

struct BoundEntry {
  std::string graph;
  LowerBound value;
};

/// The in-memory model of one problem file. All entries are validated;
/// maps keep names sorted, which fixes the canonical section order.
struct ProblemFile {
  std::map<std::string, Preorder> posets;
  std::map<std::string, VectorEntry> vectors;
  std::map<std::string, CovectorEntry> covectors;
  std::map<std::string, DpEntry> dps;
  std::map<std::string, NorphismEntry> norphisms;
  std::map<std::string, WeightedDigraph> graphs;
  std::map<std::string, BoundEntry> bounds;
};

namespace detail {

inline void check_keys(const nlohmann::json& j, const std::vector<std::string>& allowed,
                       const std::string& context) {
  if (!j.is_object()) throw Error(context + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(context + ": unknown key '" + key + "'");
    }
  }
}

inline Rat rat_from_json(const nlohmann::json& j, const std::string& context) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw Error(context + ": expected an integer or a numeric string");
}

inline nlohmann::json rat_to_json(const Rat& r) {
  if (r.denominator() == 1) return nlohmann::json(r.numerator());
  return nlohmann::json(to_string(r));
}

template <typename Map>
const typename Map::mapped_type& resolve(const Map& map, const std::string& name,
                                         const std::string& kind, const std::string& context) {
  auto it = map.find(name);
  if (it == map.end()) {
    throw Error(context + ": unresolved reference to " + kind + " '" + name + "'");
  }
  return it->second;
}

inline std::vector<std::string> string_list(const nlohmann::json& j, const std::string& context) {
  if (!j.is_array()) throw Error(context + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw Error(context + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline std::vector<std::uint8_t> pairs_to_rel(const nlohmann::json& j, const Preorder& dom,
                                              const Preorder& cod, const std::string& context) {
  if (!j.is_array()) throw Error(context + ": true_pairs must be an array of [p, q] pairs");
  std::vector<std::uint8_t> rel(dom.size() * cod.size(), 0);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw Error(context + ": true_pairs must be an array of [p, q] pairs");
    }
    rel[dom.index_of(pair[0].get<std::string>()) * cod.size() +
        cod.index_of(pair[1].get<std::string>())] = 1;
  }
  return rel;
}

inline nlohmann::json rel_to_pairs(const Preorder& dom, const Preorder& cod,
                                   const std::vector<std::uint8_t>& rel) {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t p = 0; p < dom.size(); ++p) {
    for (std::size_t q = 0; q < cod.size(); ++q) {
      if (rel[p * cod.size() + q]) {
        pairs.push_back({dom.element(p), cod.element(q)});
      }
    }
  }
  return pairs;
}

inline nlohmann::json members_json(const Preorder& space, const std::vector<std::uint8_t>& values) {
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (values[i]) members.push_back(space.element(i));
  }
  return members;
}

/// Prefixes the entity context once; messages that already carry it are
/// passed through unchanged.
[[noreturn]] inline void rethrow_in_context(const std::string& ctx, const std::exception& e) {
  const std::string what = e.what();
  if (what.rfind(ctx, 0) == 0) throw Error(what);
  throw Error(ctx + ": " + what);
}

}  // namespace detail

/// Parses and validates a problem file. Every cross-reference must
/// resolve and every entity must pass its module validator; error
/// messages name the offending entity.
inline ProblemFile parse_problem_file(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("syntax error: ") + e.what());
  }
  if (!root.is_object()) throw Error("problem file must be a JSON object");
  detail::check_keys(
      root, {"posets", "vectors", "covectors", "dps", "norphisms", "graphs", "bounds"},
      "problem file");

  ProblemFile file;
  using detail::resolve;

  if (root.contains("posets")) {
    for (const auto& [name, def] : root["posets"].items()) {
      const std::string ctx = "poset '" + name + "'";
      try {
        detail::check_keys(def, {"elements", "covers"}, ctx);
        std::vector<std::pair<std::string, std::string>> covers;
        if (def.contains("covers")) {
          for (const auto& pair : def["covers"]) {
            if (!pair.is_array() || pair.size() != 2) {
              throw Error("covers must be an array of [lo, hi] pairs");
            }
            covers.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
          }
        }
        file.posets.emplace(
            name, Preorder::from_hasse(detail::string_list(def.at("elements"), "elements"), covers));
      } catch (const std::exception& e) {
        detail::rethrow_in_context(ctx, e);
      }
    }
  }

  if (root.contains("vectors")) {
    for (const auto& [name, def] : root["vectors"].items()) {
      const std::string ctx = "vector '" + name + "'";
      try {
        detail::check_keys(def, {"space", "members"}, ctx);
        const std::string space = def.at("space").get<std::string>();
        const Preorder& p = resolve(file.posets, space, "poset", ctx);
        file.vectors.emplace(
            name, VectorEntry{space, FunctionalityVector::close_seed(
                                         p, detail::string_list(def.at("members"), "members"))});
      } catch (const std::exception& e) {
        detail::rethrow_in_context(ctx, e);
      }
    }
  }

  if (root.contains("covectors")) {
    for (const auto& [name, def] : root["covectors"].items()) {
      const std::string ctx = "covector '" + name + "'";
      try {
        detail::check_keys(def, {"space", "members"}, ctx);
        const std::string space = def.at("space").get<std::string>();
        const Preorder& p = resolve(file.posets, space, "poset", ctx);
        file.covectors.emplace(
            name, CovectorEntry{space, ResourceCovector::close_seed(
                                           p, detail::string_list(def.at("members"), "members"))});
      } catch (const std::exception& e) {
        detail::rethrow_in_context(ctx, e);
      }
    }
  }

  if (root.contains("dps")) {
    for (const auto& [name, def] : root["dps"].items()) {
      const std::string ctx = "dp '" + name + "'";
      try {
        detail::check_keys(def, {"dom", "cod", "true_pairs", "autoclose"}, ctx);
        const std::string dom = def.at("dom").get<std::string>();
        const std::string cod = def.at("cod").get<std::string>();
        const Preorder& dp = resolve(file.posets, dom, "poset", ctx);
        const Preorder& cp = resolve(file.posets, cod, "poset", ctx);
        const bool autoclose = def.value("autoclose", false);
        auto rel = detail::pairs_to_rel(def.at("true_pairs"), dp, cp, ctx);
        file.dps.emplace(
            name, DpEntry{dom, cod, DesignProblem::from_rel(dp, cp, std::move(rel), autoclose)});
      } catch (const std::exception& e) {
        detail::rethrow_in_context(ctx, e);
      }
    }
  }

  if (root.contains("norphisms")) {
    for (const auto& [name, def] : root["norphisms"].items()) {
      const std::string ctx = "norphism '" + name + "'";
      try {
        if (def.contains("schema")) {
          detail::check_keys(def, {"schema", "space", "pools"}, ctx);
          if (def.at("schema").get<std::string>() != "resource_limit") {
            throw Error("unknown schema '" + def["schema"].get<std::string>() + "'");
          }
          auto pool_names = detail::string_list(def.at("pools"), "pools");
          std::string space;
          if (def.contains("space")) {
            space = def["space"].get<std::string>();
          } else if (!pool_names.empty()) {
            space = resolve(file.covectors, pool_names.front(), "covector", ctx).space;
          } else {
            throw Error("schema with no pools requires an explicit space");
          }
          const Preorder& p = resolve(file.posets, space, "poset", ctx);
          std::vector<ResourceCovector> pools;
          for (const auto& pn : pool_names) {
            const auto& entry = resolve(file.covectors, pn, "covector", ctx);
            if (entry.space != space) {
              throw Error("pool '" + pn + "' lives on poset '" + entry.space + "', not '" +
                          space + "'");
            }
            pools.push_back(entry.value);
          }
          file.norphisms.emplace(name,
                                 NorphismEntry{space, space, resource_limit_schema(p, pools)});
        } else if (def.contains("parts")) {
          detail::check_keys(def, {"parts", "dom", "cod"}, ctx);
          std::string dom = def.value("dom", "");
          std::string cod = def.value("cod", "");
          if (!def.at("parts").is_array() || (def["parts"].empty() && (dom.empty() || cod.empty()))) {
            throw Error("parts form requires parts, or explicit dom and cod when parts is empty");
          }
          NorphismDP built;
          bool first = true;
          for (const auto& part : def["parts"]) {
            detail::check_keys(part, {"f", "r"}, ctx + " part");
            const auto& fe = resolve(file.vectors, part.at("f").get<std::string>(), "vector", ctx);
            const auto& re =
                resolve(file.covectors, part.at("r").get<std::string>(), "covector", ctx);
            if (dom.empty()) dom = fe.space;
            if (cod.empty()) cod = re.space;
            if (fe.space != dom || re.space != cod) {
              throw Error("part spaces disagree: expected ('" + dom + "', '" + cod + "')");
            }
            NorphismDP piece = performance_norphism(fe.value, re.value);
            built = first ? piece : join(built, piece);
            first = false;
          }
          if (first) {
            built = NorphismDP::zero(resolve(file.posets, dom, "poset", ctx),
                                     resolve(file.posets, cod, "poset", ctx));
          }
          file.norphisms.emplace(name, NorphismEntry{dom, cod, std::move(built)});
        } else {
          detail::check_keys(def, {"dom", "cod", "true_pairs", "autoclose"}, ctx);
          const std::string dom = def.at("dom").get<std::string>();
          const std::string cod = def.at("cod").get<std::string>();
          const Preorder& dp = resolve(file.posets, dom, "poset", ctx);
          const Preorder& cp = resolve(file.posets, cod, "poset", ctx);
          const bool autoclose = def.value("autoclose", false);
          auto rel = detail::pairs_to_rel(def.at("true_pairs"), dp, cp, ctx);
          file.norphisms.emplace(
              name, NorphismEntry{dom, cod, NorphismDP::from_rel(dp, cp, std::move(rel),
                                                                 autoclose)});
        }
      } catch (const std::exception& e) {
        detail::rethrow_in_context(ctx, e);
      }
    }
  }

  if (root.contains("graphs")) {
    for (const auto& [name, def] : root["graphs"].items()) {
      const std::string ctx = "graph '" + name + "'";
      try {
        detail::check_keys(def, {"nodes", "edges"}, ctx);
        std::vector<std::tuple<std::string, std::string, Rat>> edges;
        if (def.contains("edges")) {
          for (const auto& e : def["edges"]) {
            if (!e.is_array() || e.size() != 3) {
              throw Error("edges must be an array of [src, dst, weight] triples");
            }
            edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                             detail::rat_from_json(e[2], "weight")});
          }
        }
        file.graphs.emplace(
            name, WeightedDigraph::make(detail::string_list(def.at("nodes"), "nodes"), edges));
      } catch (const std::exception& e) {
        detail::rethrow_in_context(ctx, e);
      }
    }
  }

  if (root.contains("bounds")) {
    for (const auto& [name, def] : root["bounds"].items()) {
      const std::string ctx = "bound '" + name + "'";
      try {
        detail::check_keys(def, {"graph", "from", "to", "mu", "strict"}, ctx);
        std::string graph;
        if (def.contains("graph")) {
          graph = def["graph"].get<std::string>();
        } else if (file.graphs.size() == 1) {
          graph = file.graphs.begin()->first;
        } else {
          throw Error("bound must name its graph when the file has " +
                      std::to_string(file.graphs.size()) + " graphs");
        }
        const WeightedDigraph& g = resolve(file.graphs, graph, "graph", ctx);
        LowerBound b;
        b.from = g.index_of(def.at("from").get<std::string>());
        b.to = g.index_of(def.at("to").get<std::string>());
        b.mu = detail::rat_from_json(def.at("mu"), "mu");
        b.strict = def.value("strict", true);
        file.bounds.emplace(name, BoundEntry{graph, b});
      } catch (const std::exception& e) {
        detail::rethrow_in_context(ctx, e);
      }
    }
  }

  return file;
}

/// Canonical form: sorted keys, closed member and cell lists, generator
/// covers recomputed, explicit graph and strictness on bounds, two-space
/// indentation, trailing newline. serialize(parse(x)) is idempotent and
/// parse(serialize(m)) reproduces m.
inline std::string serialize_problem_file(const ProblemFile& file) {
  nlohmann::json root = nlohmann::json::object();

  if (!file.posets.empty()) {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [name, p] : file.posets) {
      nlohmann::json def;
      def["elements"] = p.elements();
      nlohmann::json covers = nlohmann::json::array();
      for (const auto& [lo, hi] : canonical_covers(p)) covers.push_back({lo, hi});
      def["covers"] = covers;
      section[name] = def;
    }
    root["posets"] = section;
  }

  if (!file.vectors.empty()) {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [name, entry] : file.vectors) {
      section[name] = {{"space", entry.space},
                       {"members", detail::members_json(entry.value.space(),
                                                        entry.value.values())}};
    }
    root["vectors"] = section;
  }

  if (!file.covectors.empty()) {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [name, entry] : file.covectors) {
      section[name] = {{"space", entry.space},
                       {"members", detail::members_json(entry.value.space(),
                                                        entry.value.values())}};
    }
    root["covectors"] = section;
  }

  if (!file.dps.empty()) {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [name, entry] : file.dps) {
      section[name] = {{"dom", entry.dom},
                       {"cod", entry.cod},
                       {"true_pairs", detail::rel_to_pairs(entry.value.dom(), entry.value.cod(),
                                                           entry.value.rel_matrix())}};
    }
    root["dps"] = section;
  }

  if (!file.norphisms.empty()) {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [name, entry] : file.norphisms) {
      section[name] = {{"dom", entry.dom},
                       {"cod", entry.cod},
                       {"true_pairs", detail::rel_to_pairs(entry.value.dom(), entry.value.cod(),
                                                           entry.value.rel_matrix())}};
    }
    root["norphisms"] = section;
  }

  if (!file.graphs.empty()) {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [name, g] : file.graphs) {
      nlohmann::json def;
      def["nodes"] = g.nodes();
      std::vector<WeightedDigraph::Edge> edges = g.edges();
      std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.src, a.dst, a.weight) < std::tie(b.src, b.dst, b.weight);
      });
      nlohmann::json list = nlohmann::json::array();
      for (const auto& e : edges) {
        list.push_back({g.node(e.src), g.node(e.dst), detail::rat_to_json(e.weight)});
      }
      def["edges"] = list;
      section[name] = def;
    }
    root["graphs"] = section;
  }

  if (!file.bounds.empty()) {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [name, entry] : file.bounds) {
      const WeightedDigraph& g = file.graphs.at(entry.graph);
      section[name] = {{"graph", entry.graph},
                       {"from", g.node(entry.value.from)},
                       {"to", g.node(entry.value.to)},
                       {"mu", detail::rat_to_json(entry.value.mu)},
                       {"strict", entry.value.strict}};
    }
    root["bounds"] = section;
  }

  return root.dump(2) + "\n";
}

}  // namespace norph
