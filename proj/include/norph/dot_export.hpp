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

#include <string>

#include "norph/dp.hpp"
#include "norph/metric.hpp"
#include "norph/norphism.hpp"
#include "norph/poset.hpp"
#include "norph/rational.hpp"

namespace norph {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

/// Hasse-style rendering: nodes plus generator cover edges only, drawn
/// bottom-up.
inline std::string dot_poset(const std::string& name, const Preorder& p) {
  std::string out = "digraph " + detail::dot_quote(name) + " {\n  rankdir=BT;\n";
  for (const auto& e : p.elements()) {
    out += "  " + detail::dot_quote(e) + ";\n";
  }
  for (const auto& [lo, hi] : canonical_covers(p)) {
    out += "  " + detail::dot_quote(lo) + " -> " + detail::dot_quote(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

/// Bipartite rendering of a feasibility relation: one edge per true cell
/// from the dom side to the cod side.
inline std::string dot_dp(const std::string& name, const DesignProblem& d) {
  std::string out = "digraph " + detail::dot_quote(name) + " {\n  rankdir=LR;\n";
  for (const auto& e : d.dom().elements()) {
    out += "  " + detail::dot_quote("dom:" + e) + ";\n";
  }
  for (const auto& e : d.cod().elements()) {
    out += "  " + detail::dot_quote("cod:" + e) + ";\n";
  }
  for (std::size_t p = 0; p < d.dom().size(); ++p) {
    for (std::size_t q = 0; q < d.cod().size(); ++q) {
      if (d.rel(p, q)) {
        out += "  " + detail::dot_quote("dom:" + d.dom().element(p)) + " -> " +
               detail::dot_quote("cod:" + d.cod().element(q)) + ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

/// Like dot_dp but cells are impossibility marks, drawn dashed and
/// labeled so banned pairs stand out.
inline std::string dot_norphism(const std::string& name, const NorphismDP& n) {
  std::string out = "digraph " + detail::dot_quote(name) + " {\n  rankdir=LR;\n";
  for (const auto& e : n.dom().elements()) {
    out += "  " + detail::dot_quote("dom:" + e) + ";\n";
  }
  for (const auto& e : n.cod().elements()) {
    out += "  " + detail::dot_quote("cod:" + e) + ";\n";
  }
  for (std::size_t p = 0; p < n.dom().size(); ++p) {
    for (std::size_t q = 0; q < n.cod().size(); ++q) {
      if (n.rel(p, q)) {
        out += "  " + detail::dot_quote("dom:" + n.dom().element(p)) + " -> " +
               detail::dot_quote("cod:" + n.cod().element(q)) +
               " [style=dashed, label=\"banned\"];\n";
      }
    }
  }
  out += "}\n";
  return out;
}

inline std::string dot_graph(const std::string& name, const WeightedDigraph& g) {
  std::string out = "digraph " + detail::dot_quote(name) + " {\n";
  for (const auto& n : g.nodes()) {
    out += "  " + detail::dot_quote(n) + ";\n";
  }
  for (const auto& e : g.edges()) {
    out += "  " + detail::dot_quote(g.node(e.src)) + " -> " + detail::dot_quote(g.node(e.dst)) +
           " [label=" + detail::dot_quote(to_string(e.weight)) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace norph
