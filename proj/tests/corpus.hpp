#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpa/lpa.hpp"

#ifndef LPA_GRAPH_DIR
#error "LPA_GRAPH_DIR must point at the graphs/ directory"
#endif

namespace lpa::testing {

inline std::string graph_path(const std::string& name) { return std::string(LPA_GRAPH_DIR) + "/" + name + ".json"; }

inline Graph load(const std::string& name) { return json::load_graph(graph_path(name)); }

inline AlgebraPtr algebra(const std::string& name, Field field = Field::rationals()) {
  return LeavittPathAlgebra::create(load(name), field);
}

/// Graphs in which no cycle has an exit.
inline const std::vector<std::string>& no_exit_corpus() {
  static const std::vector<std::string> names = {"a2",       "a3",        "loop",  "cycle2",   "cycle3",
                                                 "parallel", "sink_loop", "tree5", "fed_cycle"};
  return names;
}

/// Graphs with a cycle that has an exit.
inline const std::vector<std::string>& exit_corpus() {
  static const std::vector<std::string> names = {"toeplitz", "rose2"};
  return names;
}

inline std::vector<std::string> full_corpus() {
  auto out = no_exit_corpus();
  out.insert(out.end(), exit_corpus().begin(), exit_corpus().end());
  return out;
}

inline Graph make_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace lpa::testing
