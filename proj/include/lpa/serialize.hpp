#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "lpa/gmatrix.hpp"
#include "lpa/graph.hpp"
#include "lpa/laurent.hpp"
#include "lpa/regularity.hpp"
#include "lpa/structure.hpp"

namespace lpa::json {

using nlohmann::json;

// ---------------------------------------------------------------------------
// graphs

/// {"vertices": [...], "edges": [{"id", "src", "dst"}, ...]}
inline Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("graph JSON must be an object");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
      if (!v.is_string()) throw InputError("vertex ids must be strings");
      vertices.push_back(v.get<std::string>());
    }
    std::vector<EdgeSpec> edges;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        edges.push_back({e.at("id").get<std::string>(), e.at("src").get<std::string>(), e.at("dst").get<std::string>()});
      }
    }
    return Graph(std::move(vertices), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad graph JSON: ") + ex.what());
  }
}

inline Graph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("graph file is not valid JSON: ") + ex.what());
  }
  return graph_from_json(j);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

inline json to_json(const Graph& g) {
  json vertices = json::array();
  for (auto v : g.vertices()) vertices.push_back(g.id(v));
  json edges = json::array();
  for (const auto& e : g.edge_specs()) edges.push_back({{"id", e.id}, {"src", e.source}, {"dst", e.range}});
  return {{"vertices", vertices}, {"edges", edges}};
}

// ---------------------------------------------------------------------------
// scalars, paths, elements

inline json to_json(const Laurent& x) {
  json terms = json::object();
  for (const auto& [e, c] : x.terms()) terms[std::to_string(e)] = c.to_string();
  return {{"t", x.step()}, {"terms", terms}};
}

inline Laurent laurent_from_json(const json& j, Field field) {
  Laurent out(j.at("t").get<std::int64_t>());
  for (const auto& [key, value] : j.at("terms").items()) {
    out.add_term(std::stoll(key), Scalar::parse(value.get<std::string>(), field));
  }
  return out;
}

inline json path_edges(const Graph& g, const Path& p) {
  json out = json::array();
  for (auto e : p.edges()) out.push_back(g.id(e));
  return out;
}

inline json to_json(const Graph& g, const Path& p) {
  return {{"base", g.id(p.source())}, {"edges", path_edges(g, p)}};
}

inline json to_json(const Element& a) {
  const Graph& g = a.graph();
  json out = json::array();
  for (const auto& [m, c] : a.terms()) {
    out.push_back({{"p", path_edges(g, m.p())},
                   {"p_base", g.id(m.p().source())},
                   {"q", path_edges(g, m.q())},
                   {"q_base", g.id(m.q().source())},
                   {"coeff", c.to_string()}});
  }
  return out;
}

inline Path path_from_ids(const Graph& g, const json& edges, const json& base) {
  std::vector<Edge> ids;
  for (const auto& e : edges) ids.push_back(g.edge(e.get<std::string>()));
  if (ids.empty()) {
    if (base.is_null()) throw InputError("empty path needs a base vertex");
    return Path::empty(g.vertex(base.get<std::string>()));
  }
  Path p = Path::of(g, std::move(ids));
  if (!base.is_null() && g.vertex(base.get<std::string>()) != p.source()) {
    throw InputError("path base does not match its first edge");
  }
  return p;
}

/// Reads the element serialization; the result is brought to normal form.
inline Element element_from_json(const AlgebraPtr& alg, const json& j) {
  try {
    if (!j.is_array()) throw InputError("element JSON must be an array of terms");
    const Graph& g = alg->graph();
    RawSum raw;
    for (const auto& term : j) {
      const json none;
      Path p = path_from_ids(g, term.value("p", json::array()), term.contains("p_base") ? term.at("p_base") : none);
      const json q_edges = term.value("q", json::array());
      // a bare p means p q* with q = r(p)
      const json q_base = term.contains("q_base") ? term.at("q_base")
                          : q_edges.empty()       ? json(g.id(p.range()))
                                                  : none;
      Path q = path_from_ids(g, q_edges, q_base);
      if (p.range() != q.range()) throw InputError("term with r(p) != r(q) is zero and not allowed");
      const std::string coeff = term.contains("coeff") ? term.at("coeff").get<std::string>() : "1";
      raw.emplace_back(Monomial(std::move(p), std::move(q)), Scalar::parse(coeff, alg->field()));
    }
    return normal_form(alg, raw);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad element JSON: ") + ex.what());
  }
}

inline json degree_json(const Degree& d) {
  switch (d.kind) {
    case Degree::Kind::zero:
      return "zero";
    case Degree::Kind::inhomogeneous:
      return "inhomogeneous";
    case Degree::Kind::homogeneous:
      break;
  }
  return d.value;
}

// ---------------------------------------------------------------------------
// matrices and structure reports

inline json base_json(const GradedMatrixAlgebra& alg) {
  if (alg.is_laurent()) return {{"laurent_t", *alg.laurent_step()}};
  return "K";
}

inline json to_json(const GradedMatrix& m) {
  const auto& alg = m.algebra();
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      row.push_back(alg.is_laurent() ? to_json(m(i, j)) : json(m(i, j).coeff(0).to_string()));
    }
    rows.push_back(row);
  }
  return {{"shifts", alg.shifts()}, {"base", base_json(alg)}, {"entries", rows}};
}

inline json to_json(const BlockMatrices& m) {
  json out = json::array();
  for (const auto& part : m.parts()) out.push_back(to_json(part));
  return out;
}

inline json to_json(const Graph& g, const Block& b) {
  json paths = json::array();
  for (const auto& p : b.index_paths) paths.push_back(to_json(g, p));
  json out = {{"paths", paths}, {"shifts", b.shifts()}, {"size", b.size()}};
  if (b.kind == Block::Kind::sink) {
    out["kind"] = "sink";
    out["vertex"] = g.id(b.vertex);
    out["base"] = "K";
  } else {
    out["kind"] = "cycle";
    out["base"] = g.id(b.vertex);
    out["t"] = b.period();
    out["cycle"] = path_edges(g, b.cycle->path());
    out["ring"] = base_json(b.algebra);
  }
  out["algebra"] = b.algebra.describe();
  return out;
}

inline json to_json(const DecompositionReport& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(to_json(d.graph(), b));
  return {{"blocks", blocks}};
}

inline json to_json(const TypeReport& r) {
  json out = {{"gr_type_I", r.gr_type_I},
              {"graded_self_injective", r.graded_self_injective},
              {"no_exit", r.no_exit},
              {"sigma_V", r.sigma_V},
              {"note", r.note}};
  out["graded_prime"] = r.graded_prime ? json(*r.graded_prime) : json(nullptr);
  if (r.central_triple) {
    out["central_triple"] = {{"e1", to_json(r.central_triple->type_one)},
                             {"e2", to_json(r.central_triple->type_two)},
                             {"e3", to_json(r.central_triple->type_three)}};
    out["blocks"] = r.block_count;
  } else {
    out["central_triple"] = nullptr;
  }
  return out;
}

inline json to_json(const VerificationReport& r) {
  json checks = json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> summary;
  for (const auto& c : r.checks) {
    checks.push_back({{"relation", c.relation}, {"instance", c.instance}, {"passed", c.passed}});
    auto& [pass, total] = summary[c.relation];
    pass += c.passed ? 1 : 0;
    ++total;
  }
  json per_relation = json::object();
  for (const auto& [rel, counts] : summary) per_relation[rel] = {{"passed", counts.first}, {"total", counts.second}};
  return {{"checks", checks}, {"summary", per_relation}, {"all_passed", r.all_passed()}, {"failures", r.failures()}};
}

inline json to_json(const std::vector<DimensionRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back(
        {{"degree", row.degree}, {"lpa_dim", row.algebra_dim}, {"matrix_dim", row.matrix_dim}, {"match", row.matches()}});
  }
  return out;
}

inline json to_json(const IdempotentReport& r) {
  json out = {{"is_idempotent", r.is_idempotent}, {"is_homogeneous_deg0", r.is_homogeneous_deg0},
              {"block_ranks", r.block_ranks}};
  if (r.is_idempotent) {
    out["abelian"] = *r.abelian;
    out["directly_finite"] = *r.directly_finite;
    out["faithful"] = *r.faithful;
  }
  return out;
}

}  // namespace lpa::json
