#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "lpa/gmatrix.hpp"
#include "lpa/linalg.hpp"
#include "lpa/smith.hpp"
#include "lpa/structure.hpp"

namespace lpa {

/// b with a b a = a, from a = C R (rank factorization) and b = R^+ C^+.
inline ScalarMatrix inner_inverse_field(const ScalarMatrix& a) {
  auto f = rank_factorization(a);
  if (f.pivots.empty()) return ScalarMatrix(a.cols(), a.rows(), a.zero());
  return echelon_right_inverse(f.row_factor, f.pivots) * left_inverse(f.column_basis);
}

/// b with a b a = a over K[x^t, x^-t], or nullopt when some nonzero Smith
/// diagonal entry is not a unit (then no inner inverse exists: the Laurent
/// ring is a domain but not a field). Homogeneous matrices always succeed.
inline std::optional<LaurentMatrix> inner_inverse_laurent(const LaurentMatrix& a) {
  auto smith = smith_normal_form(a);
  LaurentMatrix pseudo(a.cols(), a.rows(), a.zero());
  for (std::size_t k = 0; k < std::min(a.rows(), a.cols()); ++k) {
    const Laurent& d = smith.diagonal(k, k);
    if (d.is_zero()) continue;
    if (!d.is_unit()) return std::nullopt;
    pseudo(k, k) = d.unit_inverse();
  }
  return smith.right * pseudo * smith.left;
}

namespace detail {

inline ScalarMatrix constants_of(const GradedMatrix& m) {
  return m.entries().map([](const Laurent& x) { return x.coeff(0); });
}

inline Matrix<Laurent> as_constants(const ScalarMatrix& m) {
  return m.map([](const Scalar& c) { return Laurent::constant(c, 1); });
}

}  // namespace detail

/// Some inner inverse of a block matrix (not necessarily homogeneous).
inline GradedMatrix block_inner_inverse(const GradedMatrix& m) {
  const auto& alg = m.algebra();
  if (!alg.is_laurent()) {
    return GradedMatrix(alg, detail::as_constants(inner_inverse_field(detail::constants_of(m))));
  }
  auto b = inner_inverse_laurent(m.entries());
  if (!b) throw PreconditionError("matrix has no inner inverse over the Laurent ring (not homogeneous?)");
  return GradedMatrix(alg, std::move(*b));
}

/// Rank of a block matrix; over a Laurent base, rank over the fraction field.
inline std::size_t block_rank(const GradedMatrix& m) {
  if (!m.algebra().is_laurent()) return rank(detail::constants_of(m));
  return laurent_rank(m.entries());
}

struct InnerInverse {
  Element inverse;      // homogeneous of degree -deg(a)
  Element unprojected;  // pulled back blockwise, before taking the degree component
};

/// For homogeneous a of degree lambda, b of degree -lambda with a b a = a.
///
/// a is mapped into the block algebra, each block gets an inner inverse, the
/// result is pulled back, and the degree -lambda component is kept: taking the
/// degree-lambda part of a b a = a shows that component is still an inner inverse.
inline InnerInverse graded_inner_inverse(const DecompositionReport& d, const Element& a) {
  const auto deg = degree(a);
  if (!deg.is_homogeneous()) throw PreconditionError("graded_inner_inverse needs a homogeneous element");
  if (deg.kind == Degree::Kind::zero) return {a, a};
  const auto image = phi_apply(d, a);
  std::vector<GradedMatrix> parts;
  for (const auto& m : image.parts()) parts.push_back(block_inner_inverse(m));
  Element unprojected = pull_back(d, BlockMatrices(std::move(parts)));
  Element projected = component(unprojected, -deg.value);
  if (!(a * projected * a == a)) throw InternalError("graded inner inverse failed a*b*a = a");
  return {std::move(projected), std::move(unprojected)};
}

/// A central homogeneous idempotent of the decomposed algebra: a sum of block identities.
struct CentralIdempotentVector {
  std::vector<bool> selected;

  bool is_zero() const {
    for (bool s : selected) {
      if (s) return false;
    }
    return true;
  }

  BlockMatrices matrices(const DecompositionReport& d) const {
    auto out = BlockMatrices::zero(d);
    for (std::size_t b = 0; b < selected.size(); ++b) {
      if (selected[b]) out.block(b) = GradedMatrix::identity(d.blocks[b].algebra);
    }
    return out;
  }

  Element element(const DecompositionReport& d) const { return pull_back(d, matrices(d)); }

  friend bool operator==(const CentralIdempotentVector&, const CentralIdempotentVector&) = default;
};

/// B^gr of the decomposed algebra: every block is graded simple, so its central
/// homogeneous idempotents are 0 and 1 and B^gr is the boolean cube on blocks.
inline std::vector<CentralIdempotentVector> bgr_enumerate(const DecompositionReport& d) {
  const std::size_t n = d.blocks.size();
  if (n >= 63) throw PreconditionError("too many blocks to enumerate B^gr");
  std::vector<CentralIdempotentVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    CentralIdempotentVector v{std::vector<bool>(n)};
    for (std::size_t b = 0; b < n; ++b) v.selected[b] = (mask >> b) & 1U;
    out.push_back(std::move(v));
  }
  return out;
}

struct IdempotentReport {
  bool is_idempotent = false;
  bool is_homogeneous_deg0 = false;
  std::vector<std::size_t> block_ranks;
  // Present only for idempotents.
  std::optional<bool> abelian;
  std::optional<bool> directly_finite;
  std::optional<bool> faithful;
};

inline IdempotentReport idempotent_report(const DecompositionReport& d, const Element& e) {
  IdempotentReport report;
  report.is_idempotent = e * e == e;
  const auto deg = degree(e);
  report.is_homogeneous_deg0 = deg.kind == Degree::Kind::zero || (deg.kind == Degree::Kind::homogeneous && deg.value == 0);
  const auto image = phi_apply(d, e);
  for (const auto& m : image.parts()) report.block_ranks.push_back(block_rank(m));
  if (!report.is_idempotent) return report;

  bool abelian = true;
  for (auto r : report.block_ranks) abelian = abelian && r <= 1;
  report.abelian = abelian;
  // Corners of a finite product of graded matrix rings over K and K[x^t, x^-t]
  // are again such products, hence graded directly finite.
  report.directly_finite = true;
  bool faithful = true;
  for (const auto& y : bgr_enumerate(d)) {
    if (y.is_zero()) continue;
    if ((image * y.matrices(d)).is_zero()) {
      faithful = false;
      break;
    }
  }
  report.faithful = faithful;
  return report;
}

/// Sum of the (0, 0) matrix units of all blocks: every sink plus one base
/// vertex per cycle. A faithful abelian idempotent.
inline Element type_I_witness(const DecompositionReport& d) {
  if (!no_exit_condition(d.graph())) throw NoExitViolation("type_I_witness requires that no cycle has an exit");
  Element out = Element::zero(d.algebra);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) out += phi_inverse_basis(d, b, 0, 0, 0);
  return out;
}

/// A nonzero rank-one homogeneous idempotent g in the right ideal z R, for nonzero
/// homogeneous z. With f = z b idempotent (b an inner inverse of z), pick a
/// nonzero entry f_ij of a block and set g = f_{., j} f_ij^-1 e_i^T; then f g = g.
inline Element abelian_idempotent_in_right_ideal(const DecompositionReport& d, const Element& z) {
  if (z.is_zero()) throw PreconditionError("right ideal of zero has no nonzero idempotent");
  const auto b = graded_inner_inverse(d, z).inverse;
  const auto image = phi_apply(d, z * b);
  for (std::size_t k = 0; k < image.block_count(); ++k) {
    const auto& f = image.block(k);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (f(i, j).is_zero()) continue;
        const Laurent pivot_inv = f(i, j).unit_inverse();
        auto g = BlockMatrices::zero(d);
        for (std::size_t r = 0; r < f.size(); ++r) g.block(k).set(r, i, f(r, j) * pivot_inv);
        return pull_back(d, g);
      }
    }
  }
  throw InternalError("z b vanished for nonzero z");
}

}  // namespace lpa
