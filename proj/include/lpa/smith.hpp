#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>

#include "lpa/laurent.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

using LaurentMatrix = Matrix<Laurent>;

/// U * m * V = D with U, V invertible and D diagonal, d_i | d_{i+1}.
struct SmithForm {
  LaurentMatrix left;      // U
  LaurentMatrix diagonal;  // D
  LaurentMatrix right;     // V
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const LaurentMatrix& d, std::size_t from) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::int64_t best_size = 0;
  for (std::size_t i = from; i < d.rows(); ++i) {
    for (std::size_t j = from; j < d.cols(); ++j) {
      if (d(i, j).is_zero()) continue;
      const auto size = d(i, j).euclidean_size();
      if (!best || size < best_size) {
        best = {i, j};
        best_size = size;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Smith normal form over the Euclidean domain K[y, y^-1], y = x^t.
/// Diagonal entries are left unnormalized (any associate is a valid d_i).
inline SmithForm smith_normal_form(const LaurentMatrix& m) {
  const Laurent zero(m.zero().step());
  const Laurent one = Laurent::constant(Scalar(1), zero.step());
  LaurentMatrix u = LaurentMatrix::identity(m.rows(), zero, one);
  LaurentMatrix v = LaurentMatrix::identity(m.cols(), zero, one);
  LaurentMatrix d = m;

  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < steps; ++k) {
    while (true) {
      auto pivot = detail::smallest_entry(d, k);
      if (!pivot) return {std::move(u), std::move(d), std::move(v)};
      d.swap_rows(k, pivot->first);
      u.swap_rows(k, pivot->first);
      d.swap_cols(k, pivot->second);
      v.swap_cols(k, pivot->second);

      bool leftover = false;
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (d(i, k).is_zero()) continue;
        auto [q, r] = d(i, k).divmod(d(k, k));
        d.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        leftover = leftover || !r.is_zero();
      }
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (d(k, j).is_zero()) continue;
        auto [q, r] = d(k, j).divmod(d(k, k));
        d.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        leftover = leftover || !r.is_zero();
      }
      if (leftover) continue;

      // The pivot must divide the whole trailing block; otherwise fold the
      // offending row into row k and reduce again with a smaller pivot.
      bool divides_rest = true;
      for (std::size_t i = k + 1; i < d.rows() && divides_rest; ++i) {
        for (std::size_t j = k + 1; j < d.cols(); ++j) {
          if (!d(k, k).divides(d(i, j))) {
            d.add_row_multiple(k, i, one);
            u.add_row_multiple(k, i, one);
            divides_rest = false;
            break;
          }
        }
      }
      if (divides_rest) break;
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

/// Rank over the fraction field K(x).
inline std::size_t laurent_rank(const LaurentMatrix& m) {
  auto smith = smith_normal_form(m);
  std::size_t r = 0;
  for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
    if (!smith.diagonal(k, k).is_zero()) ++r;
  }
  return r;
}

}  // namespace lpa
