#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code path they are used to check.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "lpa/lpa.hpp"

namespace lpa::oracle {

/// All edge sequences of length <= max_length forming a walk in g (including
/// one empty walk per vertex, recorded as {start, {}}).
inline std::vector<std::pair<Vertex, std::vector<Edge>>> all_walks(const Graph& g, std::size_t max_length) {
  std::vector<std::pair<Vertex, std::vector<Edge>>> out;
  std::function<void(Vertex, Vertex, std::vector<Edge>&)> go = [&](Vertex start, Vertex at, std::vector<Edge>& walk) {
    out.emplace_back(start, walk);
    if (walk.size() == max_length) return;
    for (std::uint32_t k = 0; k < g.edge_count(); ++k) {
      const Edge e{k};
      if (g.source(e) != at) continue;
      walk.push_back(e);
      go(start, g.range(e), walk);
      walk.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<Edge> walk;
    go(Vertex{v}, Vertex{v}, walk);
  }
  return out;
}

inline Vertex walk_end(const Graph& g, Vertex start, const std::vector<Edge>& walk) {
  return walk.empty() ? start : g.range(walk.back());
}

/// Simple cycles found as closed walks without repeated vertices, identified
/// by their edge sets so rotations collapse. Returns the sorted cycle lengths.
inline std::multiset<std::size_t> cycle_lengths_by_closed_walks(const Graph& g) {
  std::set<std::set<std::uint32_t>> seen;
  std::multiset<std::size_t> lengths;
  for (const auto& [start, walk] : all_walks(g, g.vertex_count())) {
    if (walk.empty() || walk_end(g, start, walk) != start) continue;
    std::set<std::uint32_t> vertices;
    bool simple = true;
    for (auto e : walk) simple = simple && vertices.insert(g.source(e).index).second;
    if (!simple) continue;
    std::set<std::uint32_t> edge_set;
    for (auto e : walk) edge_set.insert(e.index);
    if (seen.insert(edge_set).second) lengths.insert(walk.size());
  }
  return lengths;
}

/// Determinant by cofactor expansion (small matrices only).
inline Laurent determinant(const Matrix<Laurent>& m) {
  const std::size_t n = m.rows();
  const auto step = m.zero().step();
  if (n == 0) return Laurent::constant(Scalar(1), step);
  if (n == 1) return m(0, 0);
  Laurent total(step);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<Laurent> minor(n - 1, n - 1, m.zero());
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Laurent term = m(0, j) * determinant(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

/// Dimension of the degree-lambda component of M_n(R)(delta) counted from the
/// matrix-unit generators e_ij(x^(k t)) for k in a window wide enough to catch
/// every admissible exponent: count the positions (i, j) that admit one.
inline std::size_t unit_generator_count(const GradedMatrixAlgebra& alg, std::int64_t lambda) {
  std::set<std::pair<std::size_t, std::size_t>> positions;
  const std::int64_t t = alg.laurent_step().value_or(0);
  std::int64_t spread = 0;
  for (auto s : alg.shifts()) spread = std::max<std::int64_t>(spread, s < 0 ? -s : s);
  const std::int64_t window = (lambda < 0 ? -lambda : lambda) + 2 * spread + 2;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    for (std::size_t j = 0; j < alg.size(); ++j) {
      for (std::int64_t k = -window; k <= window; ++k) {
        const std::int64_t exponent = t * k;
        if (t == 0 && k != 0) continue;
        if (exponent + alg.shift(i) - alg.shift(j) == lambda) positions.emplace(i, j);
      }
    }
  }
  return positions.size();
}

/// Exhaustive search over the degree-0 component of a product of blocks over
/// F_p for elements that are idempotent and commute with every matrix unit.
/// Returns each solution as the vector of per-block "is identity" flags; any
/// solution that is neither 0 nor 1 in some block is reported as an empty vector.
inline std::vector<std::vector<bool>> central_degree_zero_idempotents(const std::vector<GradedMatrixAlgebra>& blocks,
                                                                      std::uint64_t p) {
  struct Slot {
    std::size_t block, i, j;
    std::int64_t exponent;
  };
  std::vector<Slot> slots;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& alg = blocks[b];
    for (std::size_t i = 0; i < alg.size(); ++i) {
      for (std::size_t j = 0; j < alg.size(); ++j) {
        const std::int64_t exponent = alg.shift(j) - alg.shift(i);
        if (alg.base_has_degree(exponent)) slots.push_back({b, i, j, exponent});
      }
    }
  }
  const Field field = Field::prime(p);
  std::vector<std::vector<GradedMatrix>> units(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      for (std::size_t j = 0; j < blocks[b].size(); ++j) units[b].push_back(GradedMatrix::unit(blocks[b], i, j));
    }
  }

  std::vector<std::vector<bool>> found;
  std::vector<std::uint64_t> digits(slots.size(), 0);
  while (true) {
    std::vector<GradedMatrix> element;
    for (const auto& alg : blocks) element.push_back(GradedMatrix::zero(alg));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (digits[s] == 0) continue;
      const auto& slot = slots[s];
      const auto step = blocks[slot.block].entry_step();
      element[slot.block].set(slot.i, slot.j,
                              Laurent::monomial(Scalar::from_int(static_cast<long>(digits[s]), field), slot.exponent, step));
    }
    bool ok = true;
    for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
      const auto& x = element[b];
      ok = x * x == x;
      for (const auto& u : units[b]) {
        if (!ok) break;
        ok = x * u == u * x;
      }
    }
    if (ok) {
      std::vector<bool> flags;
      bool clean = true;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const bool one = element[b] == Scalar(1) * GradedMatrix::identity(blocks[b]);
        const bool zero = element[b].is_zero();
        clean = clean && (one || zero);
        flags.push_back(one);
      }
      found.push_back(clean ? flags : std::vector<bool>{});
    }
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return found;
}

}  // namespace lpa::oracle
