#pragma once

#include <cstddef>
#include <vector>

#include "lpa/matrix.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

using ScalarMatrix = Matrix<Scalar>;

struct RowEchelon {
  ScalarMatrix reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with exact arithmetic.
inline RowEchelon row_reduce(ScalarMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && m(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    m.swap_rows(row, found);
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != row && !m(i, col).is_zero()) m.add_row_multiple(i, row, -m(i, col));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const ScalarMatrix& m) { return row_reduce(m).pivots.size(); }

/// a = column_basis * row_factor, with column_basis of full column rank and
/// row_factor of full row rank (the nonzero rows of the reduced echelon form).
struct RankFactorization {
  ScalarMatrix column_basis;
  ScalarMatrix row_factor;
  std::vector<std::size_t> pivots;
};

inline RankFactorization rank_factorization(const ScalarMatrix& a) {
  auto echelon = row_reduce(a);
  const std::size_t r = echelon.pivots.size();
  ScalarMatrix columns(a.rows(), r, a.zero());
  ScalarMatrix rows(r, a.cols(), a.zero());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) columns(i, k) = a(i, echelon.pivots[k]);
    for (std::size_t j = 0; j < a.cols(); ++j) rows(k, j) = echelon.reduced(k, j);
  }
  return {std::move(columns), std::move(rows), std::move(echelon.pivots)};
}

/// Left inverse L of a full-column-rank matrix c: L * c = I.
inline ScalarMatrix left_inverse(const ScalarMatrix& c) {
  const std::size_t m = c.rows(), r = c.cols();
  ScalarMatrix augmented(m, r + m, c.zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) augmented(i, j) = c(i, j);
    augmented(i, r + i) = Scalar(1);
  }
  auto echelon = row_reduce(std::move(augmented));
  for (std::size_t k = 0; k < r; ++k) {
    if (k >= echelon.pivots.size() || echelon.pivots[k] != k) {
      throw PreconditionError("left_inverse: matrix does not have full column rank");
    }
  }
  ScalarMatrix out(r, m, c.zero());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = echelon.reduced(i, r + j);
  }
  return out;
}

/// Right inverse of a reduced-echelon row factor: put a 1 at each pivot.
inline ScalarMatrix echelon_right_inverse(const ScalarMatrix& row_factor, const std::vector<std::size_t>& pivots) {
  ScalarMatrix out(row_factor.cols(), row_factor.rows(), row_factor.zero());
  for (std::size_t k = 0; k < pivots.size(); ++k) out(pivots[k], k) = Scalar(1);
  return out;
}

}  // namespace lpa
