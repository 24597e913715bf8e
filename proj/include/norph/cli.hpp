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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "norph/common.hpp"
#include "norph/dot_export.hpp"
#include "norph/problem_file.hpp"
#include "norph/verify.hpp"

namespace norph::cli {

struct Options {
  std::size_t cell_cap = 16;
  std::size_t trials = 25;
  std::uint64_t seed = 0;
};

/// One parsed invocation: the subcommand, its positionals, and the
/// normalized values of its flags.
struct Request {
  std::string command;
  std::vector<std::string> args;
  std::string side = "pre";
  std::vector<std::string> bounds;
  std::string suite = "all";
};

namespace detail {

inline const DpEntry& dp_arg(const ProblemFile& file, const std::string& name) {
  auto it = file.dps.find(name);
  if (it == file.dps.end()) throw Error("unknown dp '" + name + "'");
  return it->second;
}

inline const NorphismEntry& norphism_arg(const ProblemFile& file, const std::string& name) {
  auto it = file.norphisms.find(name);
  if (it == file.norphisms.end()) throw Error("unknown norphism '" + name + "'");
  return it->second;
}

inline const BoundEntry& bound_arg(const ProblemFile& file, const std::string& name) {
  auto it = file.bounds.find(name);
  if (it == file.bounds.end()) throw Error("unknown bound '" + name + "'");
  return it->second;
}

inline nlohmann::json dp_json(const std::string& dom, const std::string& cod,
                              const DesignProblem& d) {
  return {{"dom", dom},
          {"cod", cod},
          {"true_pairs", norph::detail::rel_to_pairs(d.dom(), d.cod(), d.rel_matrix())}};
}

inline nlohmann::json norphism_json(const std::string& dom, const std::string& cod,
                                    const NorphismDP& n) {
  return {{"dom", dom},
          {"cod", cod},
          {"true_pairs", norph::detail::rel_to_pairs(n.dom(), n.cod(), n.rel_matrix())}};
}

inline nlohmann::json bound_json(const ProblemFile& file, const BoundEntry& entry) {
  const WeightedDigraph& g = file.graphs.at(entry.graph);
  return {{"graph", entry.graph},
          {"from", g.node(entry.value.from)},
          {"to", g.node(entry.value.to)},
          {"mu", norph::detail::rat_to_json(entry.value.mu)},
          {"strict", entry.value.strict}};
}

/// Reads "a,b,c" as the walk a -> b -> c, taking the cheapest edge
/// (lowest index on ties) between consecutive nodes.
inline Path path_arg(const WeightedDigraph& g, const std::string& spec) {
  std::vector<std::string> names;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) names.push_back(item);
  if (names.empty()) throw Error("empty path specification");
  Path path{g.index_of(names.front()), {}};
  std::size_t at = path.src;
  for (std::size_t i = 1; i < names.size(); ++i) {
    const std::size_t next = g.index_of(names[i]);
    std::size_t chosen = g.edges().size();
    for (std::size_t e : g.out_edges(at)) {
      if (g.edge(e).dst != next) continue;
      if (chosen == g.edges().size() || g.edge(e).weight < g.edge(chosen).weight) chosen = e;
    }
    if (chosen == g.edges().size()) {
      throw Error("no edge from '" + names[i - 1] + "' to '" + names[i] + "'");
    }
    path.edges.push_back(chosen);
    at = next;
  }
  return path;
}

inline void need_args(const Request& req, std::size_t count) {
  if (req.args.size() != count) {
    throw Error("'" + req.command + "' expects " + std::to_string(count) + " arguments, got " +
                std::to_string(req.args.size()));
  }
}

inline nlohmann::json dispatch(const ProblemFile& file, const Request& req, const Options& opts) {
  if (req.command == "compose") {
    need_args(req, 2);
    const DpEntry& d = dp_arg(file, req.args[0]);
    const DpEntry& e = dp_arg(file, req.args[1]);
    return dp_json(d.dom, e.cod, compose(d.value, e.value));
  }

  if (req.command == "feasible") {
    need_args(req, 3);
    auto fit = file.vectors.find(req.args[0]);
    if (fit == file.vectors.end()) throw Error("unknown vector '" + req.args[0] + "'");
    const DpEntry& d = dp_arg(file, req.args[1]);
    auto rit = file.covectors.find(req.args[2]);
    if (rit == file.covectors.end()) throw Error("unknown covector '" + req.args[2] + "'");
    return feasible(fit->second.value, d.value, rit->second.value);
  }

  if (req.command == "ban-check") {
    need_args(req, 2);
    const NorphismEntry& n = norphism_arg(file, req.args[0]);
    const DpEntry& m = dp_arg(file, req.args[1]);
    return bans(n.value, m.value);
  }

  if (req.command == "propagate") {
    need_args(req, 2);
    const NorphismEntry& n = norphism_arg(file, req.args[0]);
    const DpEntry& attach = dp_arg(file, req.args[1]);
    const Side side = side_from_string(req.side);
    const NorphismDP out = propagate(n.value, attach.value, side);
    if (side == Side::pre) return norphism_json(attach.cod, n.cod, out);
    return norphism_json(n.dom, attach.dom, out);
  }

  if (req.command == "schema") {
    if (req.args.empty() || req.args[0] != "resource-limit") {
      throw Error("'schema' expects the form: schema resource-limit POOL...");
    }
    if (req.args.size() < 2) throw Error("resource-limit schema needs at least one pool");
    std::string space;
    std::vector<ResourceCovector> pools;
    for (std::size_t i = 1; i < req.args.size(); ++i) {
      auto it = file.covectors.find(req.args[i]);
      if (it == file.covectors.end()) throw Error("unknown covector '" + req.args[i] + "'");
      if (space.empty()) space = it->second.space;
      if (it->second.space != space) {
        throw Error("pool '" + req.args[i] + "' lives on poset '" + it->second.space +
                    "', not '" + space + "'");
      }
      pools.push_back(it->second.value);
    }
    return norphism_json(space, space,
                         resource_limit_schema(file.posets.at(space), pools));
  }

  if (req.command == "bound-propagate") {
    need_args(req, 2);
    const BoundEntry& b = bound_arg(file, req.args[0]);
    const WeightedDigraph& g = file.graphs.at(b.graph);
    const Path attach = path_arg(g, req.args[1]);
    const LowerBound out =
        propagate_bound(g, edge_sum(), b.value, attach, side_from_string(req.side));
    return bound_json(file, BoundEntry{b.graph, out});
  }

  if (req.command == "astar") {
    need_args(req, 3);
    auto git = file.graphs.find(req.args[0]);
    if (git == file.graphs.end()) throw Error("unknown graph '" + req.args[0] + "'");
    const WeightedDigraph& g = git->second;
    std::vector<LowerBound> bounds;
    for (const auto& name : req.bounds) {
      const BoundEntry& entry = bound_arg(file, name);
      if (entry.graph != req.args[0]) {
        throw Error("bound '" + name + "' belongs to graph '" + entry.graph + "'");
      }
      bounds.push_back(entry.value);
    }
    const AstarResult result =
        astar_with_bounds(g, g.index_of(req.args[1]), g.index_of(req.args[2]), bounds);
    nlohmann::json out;
    out["distance"] =
        result.distance ? norph::detail::rat_to_json(*result.distance) : nlohmann::json(nullptr);
    out["expansions"] = result.expansions;
    return out;
  }

  if (req.command == "verify") {
    VerifyOptions vopts;
    vopts.cell_cap = opts.cell_cap;
    vopts.trials = opts.trials;
    vopts.seed = opts.seed;
    const VerifyReport report = verify_suite(file, req.suite, vopts);
    nlohmann::json out;
    out["suites"] = report.checks;
    out["violations"] = report.violations;
    out["checked"] = report.checked;
    out["exact"] = report.exact;
    return out;
  }

  if (req.command == "export-dot") {
    need_args(req, 1);
    const std::string& name = req.args[0];
    std::vector<std::string> matches;
    if (file.posets.count(name)) matches.push_back("poset");
    if (file.dps.count(name)) matches.push_back("dp");
    if (file.norphisms.count(name)) matches.push_back("norphism");
    if (file.graphs.count(name)) matches.push_back("graph");
    if (matches.empty()) throw Error("unknown entity '" + name + "'");
    if (matches.size() > 1) {
      throw Error("entity name '" + name + "' is ambiguous across sections");
    }
    if (matches[0] == "poset") return dot_poset(name, file.posets.at(name));
    if (matches[0] == "dp") return dot_dp(name, file.dps.at(name).value);
    if (matches[0] == "norphism") return dot_norphism(name, file.norphisms.at(name).value);
    return dot_graph(name, file.graphs.at(name));
  }

  throw Error("unknown command '" + req.command + "'");
}

}  // namespace detail

/// Executes one command against a loaded file and wraps the result in the
/// self-describing output document.
inline nlohmann::json run_command(const ProblemFile& file, const Request& req,
                                  const Options& opts = {}) {
  nlohmann::json payload;
  payload["command"] = req.command;
  payload["args"] = req.args;
  if (req.command == "propagate" || req.command == "bound-propagate") {
    payload["side"] = req.side;
  }
  if (req.command == "astar") payload["bounds"] = req.bounds;
  if (req.command == "verify") {
    payload["suite"] = req.suite;
    payload["diagnostics"] = {"cell cap " + std::to_string(opts.cell_cap),
                              "seed " + std::to_string(opts.seed)};
  } else {
    payload["diagnostics"] = nlohmann::json::array();
  }
  payload["result"] = detail::dispatch(file, req, opts);
  return payload;
}

/// Full command-line entry point. Structured output goes to stdout,
/// diagnostics to stderr. Exit codes: 0 success, 2 any error; with
/// --exit-status a false Boolean result (or a verify run with
/// violations) exits 1.
inline int run(int argc, char** argv) {
  CLI::App app{"finite co-design relations, bans, and lower-bound propagation"};
  app.require_subcommand(1);

  std::string problem_path;
  bool exit_status = false;
  Options opts;
  app.add_option("--problem", problem_path, "problem file (JSON)")->required();
  app.add_flag("--exit-status", exit_status,
               "exit 1 when a Boolean result is false or verify finds violations");
  app.add_option("--cap", opts.cell_cap, "enumeration cap (relation cells per hom-set)");
  app.add_option("--seed", opts.seed, "seed for randomized verification trials");

  Request req;
  auto* compose_cmd = app.add_subcommand("compose", "compose two design problems");
  compose_cmd->add_option("d", "first design problem")->required();
  compose_cmd->add_option("e", "second design problem")->required();

  auto* feasible_cmd = app.add_subcommand("feasible", "contract vector, problem, and covector");
  feasible_cmd->add_option("f", "functionality vector")->required();
  feasible_cmd->add_option("d", "design problem")->required();
  feasible_cmd->add_option("r", "resource covector")->required();

  auto* ban_cmd = app.add_subcommand("ban-check", "does the norphism ban the problem");
  ban_cmd->add_option("n", "norphism")->required();
  ban_cmd->add_option("m", "design problem")->required();

  auto* prop_cmd = app.add_subcommand("propagate", "propagate a norphism across a problem");
  prop_cmd->add_option("n", "norphism")->required();
  prop_cmd->add_option("attach", "design problem to attach")->required();
  prop_cmd->add_option("--side", req.side, "pre or post")->check(CLI::IsMember({"pre", "post"}));

  auto* schema_cmd = app.add_subcommand("schema", "instantiate a norphism schema");
  schema_cmd->add_option("kind", "schema kind (resource-limit)")->required();
  schema_cmd->add_option("pools", "resource covector pools")->expected(-1);

  auto* bprop_cmd = app.add_subcommand("bound-propagate", "propagate a lower bound along a path");
  bprop_cmd->add_option("b", "bound")->required();
  bprop_cmd->add_option("attach", "path as comma-separated nodes")->required();
  bprop_cmd->add_option("--side", req.side, "pre or post")->check(CLI::IsMember({"pre", "post"}));

  auto* astar_cmd = app.add_subcommand("astar", "search guided by lower bounds");
  astar_cmd->add_option("g", "graph")->required();
  astar_cmd->add_option("a", "start node")->required();
  astar_cmd->add_option("c", "goal node")->required();
  astar_cmd->add_option("--bounds", req.bounds, "bound names")->delimiter(',');

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite over the file");
  verify_cmd->add_option("--suite", req.suite, "axioms, equivariance, expansiveness, or all")
      ->check(CLI::IsMember({"axioms", "equivariance", "expansiveness", "all"}));

  auto* dot_cmd = app.add_subcommand("export-dot", "emit an entity as DOT");
  dot_cmd->add_option("entity", "poset, dp, norphism, or graph name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    req.command = sub->get_name();
    for (const auto* option : sub->get_options()) {
      if (option->get_positional()) {
        for (const auto& value : option->results()) req.args.push_back(value);
      }
    }

    std::ifstream in(problem_path);
    if (!in) throw Error("cannot open problem file '" + problem_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const ProblemFile file = parse_problem_file(buffer.str());

    const nlohmann::json payload = run_command(file, req, opts);
    if (req.command == "export-dot") {
      std::cout << payload["result"].get<std::string>();
    } else {
      std::cout << payload.dump(2) << "\n";
    }

    if (exit_status) {
      if (payload["result"].is_boolean()) return payload["result"].get<bool>() ? 0 : 1;
      if (req.command == "verify") return payload["result"]["violations"].empty() ? 0 : 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace norph::cli
