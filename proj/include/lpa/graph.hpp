#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

struct Vertex {
  std::uint32_t index = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::uint32_t index = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeSpec {
  std::string id;
  std::string source;
  std::string range;
};

/// A finite directed multigraph.
///
/// Vertices and edges are stored sorted by identifier, so comparing indices is
/// comparing identifiers. Everything downstream that says "minimal id" relies on
/// this.
class Graph {
 public:
  Graph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edge_specs) {
    if (vertex_ids.empty()) throw InputError("graph has no vertices");
    std::sort(vertex_ids.begin(), vertex_ids.end());
    for (std::size_t k = 0; k < vertex_ids.size(); ++k) {
      if (vertex_ids[k].empty()) throw InputError("empty vertex id");
      if (k > 0 && vertex_ids[k] == vertex_ids[k - 1]) throw InputError("duplicate vertex id '" + vertex_ids[k] + "'");
    }
    vertex_ids_ = std::move(vertex_ids);
    for (std::uint32_t k = 0; k < vertex_ids_.size(); ++k) vertex_lookup_.emplace(vertex_ids_[k], Vertex{k});

    std::sort(edge_specs.begin(), edge_specs.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    out_.resize(vertex_ids_.size());
    in_.resize(vertex_ids_.size());
    for (std::size_t k = 0; k < edge_specs.size(); ++k) {
      const auto& spec = edge_specs[k];
      if (spec.id.empty()) throw InputError("empty edge id");
      if (k > 0 && spec.id == edge_specs[k - 1].id) throw InputError("duplicate edge id '" + spec.id + "'");
      const Edge e{static_cast<std::uint32_t>(k)};
      const Vertex s = lookup_vertex(spec.source, spec.id);
      const Vertex r = lookup_vertex(spec.range, spec.id);
      edge_ids_.push_back(spec.id);
      source_.push_back(s);
      range_.push_back(r);
      out_[s.index].push_back(e);
      in_[r.index].push_back(e);
      edge_lookup_.emplace(spec.id, e);
    }
  }

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edge_ids_.size(); }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (std::uint32_t k = 0; k < vertex_count(); ++k) out.push_back(Vertex{k});
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::uint32_t k = 0; k < edge_count(); ++k) out.push_back(Edge{k});
    return out;
  }

  const std::string& id(Vertex v) const { return vertex_ids_.at(v.index); }
  const std::string& id(Edge e) const { return edge_ids_.at(e.index); }

  Vertex source(Edge e) const { return source_.at(e.index); }
  Vertex range(Edge e) const { return range_.at(e.index); }

  /// Outgoing edges of v, in id order.
  const std::vector<Edge>& out_edges(Vertex v) const { return out_.at(v.index); }
  const std::vector<Edge>& in_edges(Vertex v) const { return in_.at(v.index); }

  bool is_sink(Vertex v) const { return out_edges(v).empty(); }
  /// With finitely many edges, every non-sink is regular.
  bool is_regular(Vertex v) const { return !is_sink(v); }

  std::optional<Vertex> find_vertex(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Edge> find_edge(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
  }

  Vertex vertex(const std::string& id) const {
    if (auto v = find_vertex(id)) return *v;
    throw InputError("unknown vertex '" + id + "'");
  }

  Edge edge(const std::string& id) const {
    if (auto e = find_edge(id)) return *e;
    throw InputError("unknown edge '" + id + "'");
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    for (auto e : edges()) out.push_back({id(e), id(source(e)), id(range(e))});
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edge_ids_ == b.edge_ids_ && a.source_ == b.source_ &&
           a.range_ == b.range_;
  }

 private:
  Vertex lookup_vertex(const std::string& id, const std::string& edge_id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) {
      throw InputError("edge '" + edge_id + "' references unknown vertex '" + id + "'");
    }
    return it->second;
  }

  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<Vertex> source_;
  std::vector<Vertex> range_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::unordered_map<std::string, Vertex> vertex_lookup_;
  std::unordered_map<std::string, Edge> edge_lookup_;
};

/// A path: a vertex (for the empty path) or a composable edge sequence.
/// Only constructible through validating factories, so start/end are consistent.
class Path {
 public:
  static Path empty(Vertex v) { return Path(v, v, {}); }

  static Path of(const Graph& g, std::vector<Edge> edges) {
    if (edges.empty()) throw InputError("Path::of needs at least one edge; use Path::empty");
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
      if (g.range(edges[k]) != g.source(edges[k + 1])) {
        throw InputError("edges '" + g.id(edges[k]) + "' and '" + g.id(edges[k + 1]) + "' do not compose");
      }
    }
    const Vertex s = g.source(edges.front());
    const Vertex r = g.range(edges.back());
    return Path(s, r, std::move(edges));
  }

  /// Build from a base vertex and edges; base must match the first edge's source.
  static Path of(const Graph& g, Vertex base, std::vector<Edge> edges) {
    if (edges.empty()) return empty(base);
    Path p = of(g, std::move(edges));
    if (p.start_ != base) throw InputError("path base '" + g.id(base) + "' is not the source of its first edge");
    return p;
  }

  static Path single(const Graph& g, Edge e) { return Path(g.source(e), g.range(e), {e}); }

  Vertex source() const { return start_; }
  Vertex range() const { return end_; }
  std::size_t length() const { return edges_.size(); }
  bool is_empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge last_edge() const { return edges_.back(); }

  /// this followed by other; requires range(this) == source(other).
  Path then(const Path& other) const {
    if (end_ != other.start_) throw InternalError("concatenating non-composable paths");
    if (other.is_empty()) return *this;
    if (is_empty()) return other;
    std::vector<Edge> joined = edges_;
    joined.insert(joined.end(), other.edges_.begin(), other.edges_.end());
    return Path(start_, other.end_, std::move(joined));
  }

  /// Remaining path if `prefix` is an initial segment of this path.
  std::optional<Path> after_prefix(const Path& prefix) const {
    if (prefix.start_ != start_ || prefix.length() > length()) return std::nullopt;
    if (!std::equal(prefix.edges_.begin(), prefix.edges_.end(), edges_.begin())) return std::nullopt;
    return suffix_from(prefix.length(), prefix.end_);
  }

  /// Drop the last edge. The caller supplies the new end (the dropped edge's source).
  Path without_last(const Graph& g) const {
    std::vector<Edge> shorter(edges_.begin(), edges_.end() - 1);
    return Path(start_, g.source(edges_.back()), std::move(shorter));
  }

  /// True if `pattern`'s edges occur contiguously in this path (nonempty pattern).
  bool contains(const Path& pattern) const {
    if (pattern.is_empty()) return false;
    return std::search(edges_.begin(), edges_.end(), pattern.edges_.begin(), pattern.edges_.end()) != edges_.end();
  }

  bool ends_with(const Path& tail) const {
    if (tail.length() > length() || tail.end_ != end_) return false;
    return std::equal(tail.edges_.begin(), tail.edges_.end(), edges_.end() - tail.length());
  }

  /// Ordering by (length, lexicographic edge ids, source).
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
    return a.start_ <=> b.start_;
  }
  friend bool operator==(const Path& a, const Path& b) = default;

  std::string to_string(const Graph& g) const {
    if (is_empty()) return g.id(start_);
    std::string out;
    for (auto e : edges_) out += (out.empty() ? "" : ".") + g.id(e);
    return out;
  }

 private:
  Path(Vertex s, Vertex r, std::vector<Edge> edges) : start_(s), end_(r), edges_(std::move(edges)) {}

  Path suffix_from(std::size_t k, Vertex start) const {
    return Path(start, end_, std::vector<Edge>(edges_.begin() + static_cast<std::ptrdiff_t>(k), edges_.end()));
  }

  Vertex start_;
  Vertex end_;
  std::vector<Edge> edges_;
};

/// A simple closed path rotated to start at its minimal vertex.
class Cycle {
 public:
  /// Validates closedness and simplicity and rotates to canonical form.
  static Cycle from_edges(const Graph& g, std::vector<Edge> edges) {
    Path p = Path::of(g, edges);
    if (p.source() != p.range()) throw InputError("cycle is not closed");
    std::set<Vertex> seen;
    std::size_t min_at = 0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Vertex v = g.source(edges[k]);
      if (!seen.insert(v).second) throw InputError("cycle repeats vertex '" + g.id(v) + "'");
      if (v < g.source(edges[min_at])) min_at = k;
    }
    std::rotate(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(min_at), edges.end());
    return Cycle(Path::of(g, std::move(edges)));
  }

  const Path& path() const { return path_; }
  Vertex base() const { return path_.source(); }
  std::size_t length() const { return path_.length(); }

  std::vector<Vertex> vertices(const Graph& g) const {
    std::vector<Vertex> out;
    for (auto e : path_.edges()) out.push_back(g.source(e));
    return out;
  }

  friend auto operator<=>(const Cycle& a, const Cycle& b) {
    if (auto c = a.base() <=> b.base(); c != 0) return c;
    return a.path_.edges() <=> b.path_.edges();
  }
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  explicit Cycle(Path p) : path_(std::move(p)) {}
  Path path_;
};

inline std::vector<Vertex> sinks(const Graph& g) {
  std::vector<Vertex> out;
  for (auto v : g.vertices()) {
    if (g.is_sink(v)) out.push_back(v);
  }
  return out;
}

namespace detail {

// Backtracking search for cycles whose minimal vertex is `root`; only vertices
// above root may appear, which yields every cycle once in canonical rotation.
inline void cycles_from(const Graph& g, Vertex root, Vertex at, std::vector<Edge>& stack, std::vector<bool>& on_stack,
                        std::vector<Cycle>& out) {
  for (auto e : g.out_edges(at)) {
    const Vertex next = g.range(e);
    if (next == root) {
      stack.push_back(e);
      out.push_back(Cycle::from_edges(g, stack));
      stack.pop_back();
    } else if (next > root && !on_stack[next.index]) {
      stack.push_back(e);
      on_stack[next.index] = true;
      cycles_from(g, root, next, stack, on_stack, out);
      on_stack[next.index] = false;
      stack.pop_back();
    }
  }
}

}  // namespace detail

/// Every simple cycle, once, in canonical rotation; sorted by (base, edges).
inline std::vector<Cycle> simple_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::vector<Edge> stack;
  std::vector<bool> on_stack(g.vertex_count(), false);
  for (auto root : g.vertices()) {
    on_stack[root.index] = true;
    detail::cycles_from(g, root, root, stack, on_stack, out);
    on_stack[root.index] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_exit(const Graph& g, const Cycle& c) {
  const auto& cycle_edges = c.path().edges();
  for (auto v : c.vertices(g)) {
    for (auto e : g.out_edges(v)) {
      if (std::find(cycle_edges.begin(), cycle_edges.end(), e) == cycle_edges.end()) return true;
    }
  }
  return false;
}

/// No cycle has an exit. Vacuously true for acyclic graphs.
inline bool no_exit_condition(const Graph& g) {
  for (const auto& c : simple_cycles(g)) {
    if (has_exit(g, c)) return false;
  }
  return true;
}

namespace detail {

// Paths into `target`, grown backwards one edge at a time. `keep` decides
// whether a freshly extended path survives (and is extended further).
template <typename Keep>
std::vector<Path> grow_backwards(const Graph& g, Vertex target, std::optional<std::size_t> max_length, Keep keep) {
  constexpr std::size_t kSafetyLimit = 1'000'000;
  std::vector<Path> out{Path::empty(target)};
  std::vector<Path> layer = out;
  for (std::size_t len = 1; !layer.empty() && (!max_length || len <= *max_length); ++len) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (auto e : g.in_edges(p.source())) {
        Path extended = Path::single(g, e).then(p);
        if (keep(extended)) next.push_back(std::move(extended));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    if (out.size() > kSafetyLimit) throw InternalError("path enumeration exceeded the safety limit");
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All paths ending at sink v, including the empty path, sorted.
///
/// Finite when no cycle has an exit (no cycle can then reach a sink). Outside
/// that case an explicit length bound is required and the result is truncated.
inline std::vector<Path> paths_into(const Graph& g, Vertex v, std::optional<std::size_t> max_length = std::nullopt) {
  if (!max_length && !(g.is_sink(v) && no_exit_condition(g))) {
    throw InfiniteEnumeration("paths into '" + g.id(v) +
                              "' may be infinite (target is not a sink or a cycle has an exit); pass a length bound");
  }
  return detail::grow_backwards(g, v, max_length, [](const Path&) { return true; });
}

/// Paths ending at the cycle base that do not contain the full based cycle,
/// including the empty path at the base. Every path into the base is uniquely
/// q * c^k with q from this set.
inline std::vector<Path> paths_into_cycle(const Graph& g, const Cycle& c,
                                          std::optional<std::size_t> max_length = std::nullopt) {
  if (!max_length && !no_exit_condition(g)) {
    throw InfiniteEnumeration("paths into cycle at '" + g.id(c.base()) +
                              "' may be infinite (a cycle has an exit); pass a length bound");
  }
  const auto& cycle_edges = c.path().edges();
  // New occurrences of the cycle can only appear at the front of the grown path.
  return detail::grow_backwards(g, c.base(), max_length, [&](const Path& p) {
    return !(p.length() >= cycle_edges.size() &&
             std::equal(cycle_edges.begin(), cycle_edges.end(), p.edges().begin()));
  });
}

/// Split p (ending at c's base) as q * c^w with q not ending in a full copy of c.
inline std::pair<Path, std::size_t> strip_cycle_powers(const Graph& g, Path p, const Cycle& c) {
  std::size_t w = 0;
  while (p.length() >= c.length() && p.ends_with(c.path())) {
    for (std::size_t k = 0; k < c.length(); ++k) p = p.without_last(g);
    ++w;
  }
  return {std::move(p), w};
}

}  // namespace lpa
