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
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "norph/common.hpp"
#include "norph/nategory.hpp"
#include "norph/rational.hpp"

namespace norph {

/// A directed graph with non-negative rational edge weights. Parallel
/// edges and self-loops are allowed.
class WeightedDigraph {
 public:
  struct Edge {
    std::size_t src;
    std::size_t dst;
    Rat weight;
  };

  WeightedDigraph() = default;

  static WeightedDigraph make(std::vector<std::string> nodes,
                              const std::vector<std::tuple<std::string, std::string, Rat>>& edges) {
    WeightedDigraph g;
    g.nodes_ = std::move(nodes);
    for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
      if (!g.index_.emplace(g.nodes_[i], i).second) {
        throw Error("duplicate node name '" + g.nodes_[i] + "'");
      }
    }
    g.out_.assign(g.nodes_.size(), {});
    for (const auto& [src, dst, weight] : edges) {
      if (weight < Rat(0)) {
        throw Error("negative weight on edge '" + src + "' -> '" + dst + "'");
      }
      const Edge e{g.index_of(src), g.index_of(dst), weight};
      g.out_[e.src].push_back(g.edges_.size());
      g.edges_.push_back(e);
    }
    return g;
  }

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::string& node(std::size_t i) const { return nodes_.at(i); }

  std::size_t index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown node '" + name + "'");
    return it->second;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  const std::vector<std::size_t>& out_edges(std::size_t node) const { return out_.at(node); }

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A walk through the graph: a start node and a chain of edge indices.
/// The empty path at a node is the identity of the path category.
struct Path {
  std::size_t src = 0;
  std::vector<std::size_t> edges;
};

/// Destination after walking the path; verifies the chain is connected.
inline std::size_t path_dst(const WeightedDigraph& g, const Path& p) {
  std::size_t at = p.src;
  for (std::size_t e : p.edges) {
    if (g.edge(e).src != at) {
      throw Error("broken path: edge does not start where the walk is");
    }
    at = g.edge(e).dst;
  }
  return at;
}

inline Path concat(const WeightedDigraph& g, const Path& a, const Path& b) {
  if (path_dst(g, a) != b.src) throw Error("paths are not composable");
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

/// A cost assignment to paths. The default sums edge weights; any
/// replacement should stay subadditive under concatenation, which
/// check_subadditive can probe.
struct LengthFunctional {
  std::function<Rat(const WeightedDigraph&, const Path&)> value;
};

inline LengthFunctional edge_sum() {
  LengthFunctional l;
  l.value = [](const WeightedDigraph& g, const Path& p) {
    Rat sum(0);
    for (std::size_t e : p.edges) sum += g.edge(e).weight;
    return sum;
  };
  return l;
}

/// min(edge sum, cap). Subadditive for any cap >= 0.
inline LengthFunctional capped_edge_sum(Rat cap) {
  LengthFunctional l;
  l.value = [cap](const WeightedDigraph& g, const Path& p) {
    Rat sum(0);
    for (std::size_t e : p.edges) sum += g.edge(e).weight;
    return std::min(sum, cap);
  };
  return l;
}

inline Rat path_length(const WeightedDigraph& g, const LengthFunctional& l, const Path& p) {
  path_dst(g, p);
  return l.value(g, p);
}

/// All paths from a to c with at most max_edges edges, shortest first by
/// edge count, then lexicographic by edge index. Walks may revisit nodes.
inline std::vector<Path> enumerate_paths(const WeightedDigraph& g, std::size_t a, std::size_t c,
                                         std::size_t max_edges) {
  std::vector<Path> out;
  std::vector<Path> frontier{Path{a, {}}};
  for (std::size_t len = 0; len <= max_edges; ++len) {
    for (const auto& p : frontier) {
      if (path_dst(g, p) == c) out.push_back(p);
    }
    if (len == max_edges) break;
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (std::size_t e : g.out_edges(path_dst(g, p))) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// True iff no composable pair of paths (each within the edge cap)
/// violates L(a;b) <= L(a) + L(b).
inline bool check_subadditive(const WeightedDigraph& g, const LengthFunctional& l,
                              std::size_t max_edges) {
  std::vector<Path> all;
  for (std::size_t a = 0; a < g.node_count(); ++a) {
    for (std::size_t c = 0; c < g.node_count(); ++c) {
      auto paths = enumerate_paths(g, a, c, max_edges);
      all.insert(all.end(), paths.begin(), paths.end());
    }
  }
  for (const auto& p : all) {
    for (const auto& q : all) {
      if (path_dst(g, p) != q.src) continue;
      if (path_length(g, l, concat(g, p, q)) > path_length(g, l, p) + path_length(g, l, q)) {
        return false;
      }
    }
  }
  return true;
}

/// A claimed lower bound on the length of every path between two nodes.
/// Strict mode bans paths with L < mu; literal mode also bans L == mu.
/// Soundness (no path is actually shorter than mu) is a property checked
/// against the oracle, not a constructor requirement.
struct LowerBound {
  std::size_t from = 0;
  std::size_t to = 0;
  Rat mu{0};
  bool strict = true;
};

inline bool threshold_bans(const WeightedDigraph& g, const LengthFunctional& l,
                           const LowerBound& b, const Path& p) {
  if (p.src != b.from || path_dst(g, p) != b.to) {
    throw Error("path endpoints do not match the bound's pair");
  }
  const Rat len = path_length(g, l, p);
  return b.strict ? len < b.mu : len <= b.mu;
}

/// Trades a path against a bound: attaching f : a -> b to a bound on
/// (a, c) leaves mu - L(f) on (b, c); attaching g : b -> c leaves
/// mu - L(g) on (a, b). Subadditivity of L makes the result sound
/// whenever the input is.
inline LowerBound propagate_bound(const WeightedDigraph& g, const LengthFunctional& l,
                                  const LowerBound& b, const Path& attach, Side side) {
  if (side == Side::pre) {
    if (attach.src != b.from) {
      throw Error("pre attachment must start at the bound's source");
    }
    return LowerBound{path_dst(g, attach), b.to, b.mu - path_length(g, l, attach), b.strict};
  }
  if (path_dst(g, attach) != b.to) {
    throw Error("post attachment must end at the bound's target");
  }
  return LowerBound{b.from, attach.src, b.mu - path_length(g, l, attach), b.strict};
}

/// Exact single-source shortest distance under the edge-sum length;
/// nullopt when the target is unreachable.
inline std::optional<Rat> shortest_distance(const WeightedDigraph& g, std::size_t a,
                                            std::size_t c) {
  std::vector<std::optional<Rat>> dist(g.node_count());
  using Item = std::pair<Rat, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[a] = Rat(0);
  queue.push({Rat(0), a});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (!dist[u] || d > *dist[u]) continue;
    if (u == c) return d;
    for (std::size_t e : g.out_edges(u)) {
      const Rat nd = d + g.edge(e).weight;
      const std::size_t v = g.edge(e).dst;
      if (!dist[v] || nd < *dist[v]) {
        dist[v] = nd;
        queue.push({nd, v});
      }
    }
  }
  return std::nullopt;
}

/// True iff mu never overestimates: every path from the pair's source to
/// its target has length >= mu. Vacuously true when unreachable.
inline bool check_sound(const WeightedDigraph& g, const LowerBound& b) {
  const auto d = shortest_distance(g, b.from, b.to);
  return !d || b.mu <= *d;
}

struct AstarResult {
  std::optional<Rat> distance;
  std::size_t expansions = 0;
};

/// Best-first search guided by the supplied bounds, read as admissible
/// heuristic values h(x) = max mu over bounds on (x, c), clamped at 0.
/// Every bound is first validated against the oracle on its own pair and
/// rejected if it overestimates. Stale queue entries are skipped rather
/// than prevented, so inconsistent (but admissible) heuristics still
/// yield exact distances; expansions counts non-stale pops including the
/// goal.
inline AstarResult astar_with_bounds(const WeightedDigraph& g, std::size_t a, std::size_t c,
                                     const std::vector<LowerBound>& bounds) {
  for (const auto& b : bounds) {
    const auto d = shortest_distance(g, b.from, b.to);
    if (d && b.mu > *d) {
      throw Error("inadmissible bound on ('" + g.node(b.from) + "', '" + g.node(b.to) +
                  "'): " + to_string(b.mu) + " > distance " + to_string(*d));
    }
  }
  std::vector<Rat> h(g.node_count(), Rat(0));
  for (const auto& b : bounds) {
    if (b.to == c && b.mu > h[b.from]) h[b.from] = b.mu;
  }

  std::vector<std::optional<Rat>> best(g.node_count());
  using Item = std::tuple<Rat, Rat, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  best[a] = Rat(0);
  queue.push({h[a], Rat(0), a});
  AstarResult result;
  while (!queue.empty()) {
    auto [f, d, u] = queue.top();
    queue.pop();
    if (!best[u] || d > *best[u]) continue;
    ++result.expansions;
    if (u == c) {
      result.distance = d;
      return result;
    }
    for (std::size_t e : g.out_edges(u)) {
      const Rat nd = d + g.edge(e).weight;
      const std::size_t v = g.edge(e).dst;
      if (!best[v] || nd < *best[v]) {
        best[v] = nd;
        queue.push({nd + h[v], nd, v});
      }
    }
  }
  return result;
}

/// The path category of an acyclic graph: one object per node, one
/// morphism per path, concatenation as composition. Acyclicity keeps the
/// morphism count finite and composition total; cyclic graphs are
/// rejected. The hom-order is discrete.
struct PathInstance {
  FiniteCategory cat;
  WeightedDigraph graph;
  std::vector<Path> paths;
  HomPreorder order;
};

inline PathInstance make_path_instance(const WeightedDigraph& g) {
  std::vector<std::size_t> indegree(g.node_count(), 0);
  for (const auto& e : g.edges()) ++indegree[e.dst];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t u = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t e : g.out_edges(u)) {
      if (--indegree[g.edge(e).dst] == 0) ready.push_back(g.edge(e).dst);
    }
  }
  if (seen != g.node_count()) {
    throw Error("graph has a cycle; the path category would be infinite");
  }

  std::vector<Path> paths;
  std::vector<FiniteCategory::Morphism> morphisms;
  std::unordered_map<std::string, std::size_t> by_key;
  auto key_of = [](const Path& p) {
    std::string key = std::to_string(p.src) + ":";
    for (std::size_t e : p.edges) key += std::to_string(e) + ",";
    return key;
  };
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    std::vector<Path> frontier{Path{v, {}}};
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (auto& p : frontier) {
        const std::size_t dst = path_dst(g, p);
        for (std::size_t e : g.out_edges(dst)) {
          Path q = p;
          q.edges.push_back(e);
          next.push_back(std::move(q));
        }
        const std::string name = "path" + std::to_string(paths.size()) + ":" + g.node(p.src) +
                                 "->" + g.node(dst);
        by_key.emplace(key_of(p), paths.size());
        morphisms.push_back({name, p.src, dst});
        paths.push_back(std::move(p));
      }
      frontier = std::move(next);
    }
  }

  std::vector<std::size_t> identities(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    identities[v] = by_key.at(key_of(Path{v, {}}));
  }
  const std::size_t nm = paths.size();
  std::vector<std::size_t> comp(nm * nm, FiniteCategory::npos);
  for (std::size_t f = 0; f < nm; ++f) {
    for (std::size_t k = 0; k < nm; ++k) {
      if (morphisms[f].cod != morphisms[k].dom) continue;
      comp[f * nm + k] = by_key.at(key_of(concat(g, paths[f], paths[k])));
    }
  }

  PathInstance inst;
  inst.cat = FiniteCategory::build(g.nodes(), std::move(morphisms), std::move(identities),
                                   std::move(comp));
  inst.order = HomPreorder::discrete(inst.cat);
  inst.graph = g;
  inst.paths = std::move(paths);
  return inst;
}

/// The ban induced by a lower bound on the enumerated hom-set: too-short
/// paths are impossible, so a path under the bound is banned.
inline NorphismGeneric threshold_norphism(const PathInstance& inst, const LengthFunctional& l,
                                          const LowerBound& b) {
  const auto& hom = inst.cat.hom(b.from, b.to);
  std::vector<std::uint8_t> banned(hom.size(), 0);
  for (std::size_t i = 0; i < hom.size(); ++i) {
    banned[i] = threshold_bans(inst.graph, l, b, inst.paths[hom[i]]) ? 1 : 0;
  }
  return make_generic_norphism(inst.cat, b.from, b.to, std::move(banned));
}

/// Inexact rules for the path instance that route through propagate_bound
/// instead of composite lookups. Each norphism handed to the rules must
/// have been registered with the bound it was built from. The returned
/// closures borrow `inst`, which must outlive them.
inline InexactRules metric_rules(const PathInstance& inst, const LengthFunctional& l,
                                 std::vector<std::pair<NorphismGeneric, LowerBound>> registry) {
  auto find_bound = [registry](const NorphismGeneric& n) {
    for (const auto& [wrapped, bound] : registry) {
      if (wrapped.dom == n.dom && wrapped.cod == n.cod && wrapped.banned == n.banned) {
        return bound;
      }
    }
    throw Error("norphism was not registered with a bound");
  };
  InexactRules rules;
  rules.left = [&inst, l, find_bound](const FiniteCategory&, std::size_t f,
                                      const NorphismGeneric& n) {
    const LowerBound b = find_bound(n);
    return threshold_norphism(inst, l,
                              propagate_bound(inst.graph, l, b, inst.paths[f], Side::pre));
  };
  rules.right = [&inst, l, find_bound](const FiniteCategory&, const NorphismGeneric& n,
                                       std::size_t gmor) {
    const LowerBound b = find_bound(n);
    return threshold_norphism(inst, l,
                              propagate_bound(inst.graph, l, b, inst.paths[gmor], Side::post));
  };
  return rules;
}

}  // namespace norph
