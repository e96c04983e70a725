#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/error.hpp"
#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// For every regular vertex, the outgoing edge with minimal id.
class SpecialEdgeChoice {
 public:
  explicit SpecialEdgeChoice(const Graph& g) : edge_of_(g.vertex_count()) {
    for (auto v : g.vertices()) {
      if (!g.out_edges(v).empty()) edge_of_[v.index] = g.out_edges(v).front();
    }
  }

  std::optional<Edge> at(Vertex v) const { return edge_of_.at(v.index); }

  bool is_special(const Graph& g, Edge e) const { return edge_of_.at(g.source(e).index) == e; }

  std::map<Vertex, Edge> as_map() const {
    std::map<Vertex, Edge> out;
    for (std::uint32_t k = 0; k < edge_of_.size(); ++k) {
      if (edge_of_[k]) out.emplace(Vertex{k}, *edge_of_[k]);
    }
    return out;
  }

 private:
  std::vector<std::optional<Edge>> edge_of_;
};

inline SpecialEdgeChoice special_edges(const Graph& g) { return SpecialEdgeChoice(g); }

/// p * q^* with r(p) = r(q).
class Monomial {
 public:
  Monomial(Path p, Path q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.range() != q_.range()) throw InputError("monomial p*q^* needs r(p) = r(q)");
  }

  const Path& p() const { return p_; }
  const Path& q() const { return q_; }
  std::int64_t degree() const {
    return static_cast<std::int64_t>(p_.length()) - static_cast<std::int64_t>(q_.length());
  }
  Monomial star() const { return Monomial(q_, p_); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string(const Graph& g) const {
    if (q_.is_empty()) return p_.to_string(g);
    if (p_.is_empty()) return "(" + q_.to_string(g) + ")*";
    return p_.to_string(g) + "(" + q_.to_string(g) + ")*";
  }

 private:
  Path p_;
  Path q_;
};

/// Basis monomials: not both ending in the same edge that is special at its source.
inline bool is_admissible(const Graph& g, const SpecialEdgeChoice& special, const Monomial& m) {
  if (m.p().is_empty() || m.q().is_empty()) return true;
  const Edge last = m.p().last_edge();
  return !(last == m.q().last_edge() && special.is_special(g, last));
}

/// L_K(E) for a finite graph: the graph, its coefficient field and the
/// special-edge choice that fixes the normal-form basis.
class LeavittPathAlgebra {
 public:
  static std::shared_ptr<const LeavittPathAlgebra> create(Graph g, Field field = Field::rationals()) {
    return std::shared_ptr<const LeavittPathAlgebra>(new LeavittPathAlgebra(std::move(g), field));
  }

  const Graph& graph() const { return graph_; }
  Field field() const { return field_; }
  const SpecialEdgeChoice& special() const { return special_; }

 private:
  LeavittPathAlgebra(Graph g, Field field) : graph_(std::move(g)), field_(field), special_(graph_) {}

  Graph graph_;
  Field field_;
  SpecialEdgeChoice special_;
};

using AlgebraPtr = std::shared_ptr<const LeavittPathAlgebra>;

/// Degree of an element: the zero element lies in every component.
struct Degree {
  enum class Kind { zero, homogeneous, inhomogeneous };
  Kind kind = Kind::zero;
  std::int64_t value = 0;

  bool is_homogeneous() const { return kind != Kind::inhomogeneous; }
  friend bool operator==(const Degree&, const Degree&) = default;
};

using RawSum = std::vector<std::pair<Monomial, Scalar>>;

struct NormalFormStats {
  std::size_t rewrite_steps = 0;
};

class Element;
Element normal_form(const AlgebraPtr& alg, const RawSum& raw, NormalFormStats* stats = nullptr);

/// An element of L_K(E) in canonical form: a map from admissible monomials to
/// nonzero coefficients. Equal elements have equal term maps.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static Element zero(const AlgebraPtr& alg) { return Element(alg); }

  static Element vertex(const AlgebraPtr& alg, Vertex v) {
    return from_monomial(alg, Monomial(Path::empty(v), Path::empty(v)));
  }

  static Element edge(const AlgebraPtr& alg, Edge e) {
    const auto& g = alg->graph();
    return from_monomial(alg, Monomial(Path::single(g, e), Path::empty(g.range(e))));
  }

  static Element ghost(const AlgebraPtr& alg, Edge e) {
    const auto& g = alg->graph();
    return from_monomial(alg, Monomial(Path::empty(g.range(e)), Path::single(g, e)));
  }

  static Element path(const AlgebraPtr& alg, const Path& p) {
    return from_monomial(alg, Monomial(p, Path::empty(p.range())));
  }

  /// c * p q^*, reduced to normal form.
  static Element from_monomial(const AlgebraPtr& alg, const Monomial& m, const Scalar& c = Scalar(1)) {
    return normal_form(alg, RawSum{{m, c}});
  }

  /// Sum of all vertices, the multiplicative identity.
  static Element identity(const AlgebraPtr& alg) {
    Element out(alg);
    for (auto v : alg->graph().vertices()) {
      out.terms_.emplace(Monomial(Path::empty(v), Path::empty(v)), Scalar::from_int(1, alg->field()));
    }
    return out;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const Graph& graph() const { return alg_->graph(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  friend Element operator+(const Element& a, const Element& b) {
    a.check_same(b);
    Element out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend Element operator-(const Element& a, const Element& b) { return a + (-b); }

  Element operator-() const { return Scalar(-1) * *this; }

  friend Element operator*(const Scalar& s, const Element& a) {
    Element out(a.alg_);
    const Scalar k = s.in(a.alg_->field());
    if (k.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, k * c);
    return out;
  }

  friend Element operator*(const Element& a, const Element& b);

  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  friend bool operator==(const Element& a, const Element& b) {
    a.check_same(b);
    return a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (!c.is_one()) out += c.to_string() + "*";
      out += m.to_string(graph());
    }
    return out;
  }

 private:
  friend Element normal_form(const AlgebraPtr&, const RawSum&, NormalFormStats*);

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c.in(alg_->field()));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void check_same(const Element& o) const {
    if (alg_ != o.alg_) throw MismatchError("elements belong to different Leavitt path algebras");
  }

  AlgebraPtr alg_;
  Terms terms_;
};

namespace detail {

// Rewrites (p.g)(q.g)^* for special g at v = s(g) into p q^* - sum_{e != g} (p.e)(q.e)^*,
// recursing on the first term; the other terms are admissible by construction.
inline void reduce_into(const Graph& g, const SpecialEdgeChoice& special, const Monomial& m, const Scalar& c,
                        std::vector<std::pair<Monomial, Scalar>>& out, NormalFormStats* stats) {
  Monomial current = m;
  while (!is_admissible(g, special, current)) {
    if (stats) ++stats->rewrite_steps;
    const Edge gamma = current.p().last_edge();
    const Vertex v = g.source(gamma);
    Path p = current.p().without_last(g);
    Path q = current.q().without_last(g);
    for (auto e : g.out_edges(v)) {
      if (e == gamma) continue;
      const Path step = Path::single(g, e);
      out.emplace_back(Monomial(p.then(step), q.then(step)), -c);
    }
    current = Monomial(std::move(p), std::move(q));
  }
  out.emplace_back(std::move(current), c);
}

}  // namespace detail

/// Canonical representative of a formal sum of monomials.
inline Element normal_form(const AlgebraPtr& alg, const RawSum& raw, NormalFormStats* stats) {
  const auto& g = alg->graph();
  std::vector<std::pair<Monomial, Scalar>> reduced;
  for (const auto& [m, c] : raw) {
    if (c.is_zero()) continue;
    detail::reduce_into(g, alg->special(), m, c, reduced, stats);
  }
  Element out(alg);
  for (const auto& [m, c] : reduced) out.add_term(m, c);
  return out;
}

/// (p1 q1^*)(p2 q2^*) before normalization, or nullopt when it vanishes.
inline std::optional<Monomial> multiply_monomials(const Monomial& a, const Monomial& b) {
  if (auto rest = b.p().after_prefix(a.q())) return Monomial(a.p().then(*rest), b.q());
  if (auto rest = a.q().after_prefix(b.p())) return Monomial(a.p(), b.q().then(*rest));
  return std::nullopt;
}

inline Element operator*(const Element& a, const Element& b) {
  a.check_same(b);
  RawSum raw;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (auto m = multiply_monomials(ma, mb)) raw.emplace_back(std::move(*m), ca * cb);
    }
  }
  return normal_form(a.alg_, raw);
}

inline Element mul(const Element& a, const Element& b) { return a * b; }

inline Element identity(const AlgebraPtr& alg) { return Element::identity(alg); }

/// Linear extension of (p q^*)^* = q p^*.
inline Element involution(const Element& a) {
  RawSum raw;
  for (const auto& [m, c] : a.terms()) raw.emplace_back(m.star(), c);
  return normal_form(a.algebra(), raw);
}

inline Degree degree(const Element& a) {
  if (a.is_zero()) return {};
  const std::int64_t d = a.terms().begin()->first.degree();
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() != d) return {Degree::Kind::inhomogeneous, 0};
  }
  return {Degree::Kind::homogeneous, d};
}

inline std::map<std::int64_t, Element> homogeneous_components(const Element& a) {
  std::map<std::int64_t, RawSum> parts;
  for (const auto& [m, c] : a.terms()) parts[m.degree()].emplace_back(m, c);
  std::map<std::int64_t, Element> out;
  for (const auto& [d, raw] : parts) out.emplace(d, normal_form(a.algebra(), raw));
  return out;
}

/// Degree-n homogeneous component (zero if absent).
inline Element component(const Element& a, std::int64_t n) {
  RawSum raw;
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() == n) raw.emplace_back(m, c);
  }
  return normal_form(a.algebra(), raw);
}

namespace detail {

inline void paths_from(const Graph& g, const Path& p, std::size_t max_length, std::vector<std::vector<Path>>& by_range) {
  by_range[p.range().index].push_back(p);
  if (p.length() == max_length) return;
  for (auto e : g.out_edges(p.range())) paths_from(g, p.then(Path::single(g, e)), max_length, by_range);
}

}  // namespace detail

/// Admissible monomials of degree n, enumerated from forward paths.
///
/// Without exits every admissible p q^* has min(|p|, |q|) < |E^0| (a longer
/// path into a vertex must end on the cycle through it, in its special edge),
/// so lengths up to |E^0| + |n| cover the whole component. With exits the
/// component is infinite-dimensional and a caller bound is mandatory.
inline std::vector<Monomial> basis_monomials(const Graph& g, const SpecialEdgeChoice& special, std::int64_t n,
                                             std::optional<std::size_t> max_length = std::nullopt) {
  if (!max_length && !no_exit_condition(g)) {
    throw InfiniteEnumeration("graded component is infinite-dimensional (a cycle has an exit); pass a length bound");
  }
  const std::size_t abs_n = static_cast<std::size_t>(n < 0 ? -n : n);
  const std::size_t bound = max_length.value_or(g.vertex_count() + abs_n);
  std::vector<std::vector<Path>> by_range(g.vertex_count());
  for (auto v : g.vertices()) detail::paths_from(g, Path::empty(v), bound, by_range);

  std::vector<Monomial> out;
  for (const auto& into : by_range) {
    for (const auto& p : into) {
      for (const auto& q : into) {
        if (static_cast<std::int64_t>(p.length()) - static_cast<std::int64_t>(q.length()) != n) continue;
        Monomial m(p, q);
        if (is_admissible(g, special, m)) out.push_back(std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// dim_K of the degree-n component of L_K(E).
inline std::size_t graded_dim(const Graph& g, std::int64_t n, std::optional<std::size_t> max_length = std::nullopt) {
  return basis_monomials(g, special_edges(g), n, max_length).size();
}

}  // namespace lpa
