#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lpa/algebra.hpp"

namespace lpa {

/// Deterministic draws from a 64-bit Mersenne twister. Plain modulo reduction is
/// used instead of std::uniform_int_distribution so sequences match across
/// standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items.at(below(items.size()));
  }

  /// Coefficient from the fixed set {1, 2, 3, -1, -2, 1/2}.
  Scalar coefficient(Field field) {
    static const char* const kChoices[] = {"1", "2", "3", "-1", "-2", "1/2"};
    const auto k = below(6);
    if (field.modulus() == 2) return Scalar::from_int(1, field);
    return Scalar::parse(kChoices[k], field);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random walk p of length <= max_length, then q ending at r(p) by walking backwards.
/// Works on any graph; the monomial need not be admissible.
inline Monomial random_monomial(const Graph& g, Sampler& rng, std::size_t max_length) {
  auto walk = [&](Vertex start, bool forward) {
    std::vector<Edge> edges;
    Vertex at = start;
    const auto len = rng.below(max_length + 1);
    for (std::size_t k = 0; k < len; ++k) {
      const auto& options = forward ? g.out_edges(at) : g.in_edges(at);
      if (options.empty()) break;
      const Edge e = rng.pick(options);
      edges.push_back(e);
      at = forward ? g.range(e) : g.source(e);
    }
    return std::pair{edges, at};
  };
  const Vertex start = rng.pick(g.vertices());
  auto [p_edges, end] = walk(start, true);
  auto [q_back, q_start] = walk(end, false);
  std::reverse(q_back.begin(), q_back.end());
  Path p = Path::of(g, start, std::move(p_edges));
  Path q = Path::of(g, q_start, std::move(q_back));
  return Monomial(std::move(p), std::move(q));
}

/// A nonzero homogeneous element of the given degree built from 1..max_terms
/// basis monomials, or nullopt if that component is empty.
inline std::optional<Element> random_homogeneous(const AlgebraPtr& alg, Sampler& rng, std::int64_t degree,
                                                 std::size_t max_terms = 3,
                                                 std::optional<std::size_t> max_length = std::nullopt) {
  auto basis = basis_monomials(alg->graph(), alg->special(), degree, max_length);
  if (basis.empty()) return std::nullopt;
  const auto count = 1 + rng.below(max_terms);
  for (int attempt = 0; attempt < 16; ++attempt) {
    RawSum raw;
    for (std::size_t k = 0; k < count; ++k) raw.emplace_back(rng.pick(basis), rng.coefficient(alg->field()));
    auto e = normal_form(alg, raw);
    if (!e.is_zero()) return e;
  }
  return Element::from_monomial(alg, rng.pick(basis), Scalar::from_int(1, alg->field()));
}

}  // namespace lpa
