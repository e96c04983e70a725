#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/error.hpp"
#include "lpa/laurent.hpp"
#include "lpa/matrix.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// M_n(R)(delta_1, ..., delta_n) for R = K (trivially graded) or R = K[x^t, x^-t].
///
/// Entries are always stored as Laurent elements; over K they are constants of
/// step 1, which keeps a single matrix type for both kinds of block.
class GradedMatrixAlgebra {
 public:
  /// laurent_step == nullopt selects the trivially graded field K.
  GradedMatrixAlgebra(std::optional<std::int64_t> laurent_step, std::vector<std::int64_t> shifts,
                      Field field = Field::rationals())
      : laurent_step_(laurent_step), shifts_(std::move(shifts)), field_(field) {
    if (shifts_.empty()) throw InputError("graded matrix algebra needs n >= 1");
    if (laurent_step_ && *laurent_step_ <= 0) throw InputError("Laurent step must be positive");
  }

  static GradedMatrixAlgebra over_field(std::vector<std::int64_t> shifts, Field field = Field::rationals()) {
    return GradedMatrixAlgebra(std::nullopt, std::move(shifts), field);
  }

  static GradedMatrixAlgebra over_laurent(std::int64_t step, std::vector<std::int64_t> shifts,
                                          Field field = Field::rationals()) {
    return GradedMatrixAlgebra(step, std::move(shifts), field);
  }

  std::size_t size() const { return shifts_.size(); }
  const std::vector<std::int64_t>& shifts() const { return shifts_; }
  std::int64_t shift(std::size_t i) const { return shifts_.at(i); }
  bool is_laurent() const { return laurent_step_.has_value(); }
  std::optional<std::int64_t> laurent_step() const { return laurent_step_; }
  /// Step used for the Laurent entries (1 over K).
  std::int64_t entry_step() const { return laurent_step_.value_or(1); }
  Field field() const { return field_; }

  Laurent zero_entry() const { return Laurent(entry_step()); }
  Laurent one_entry() const { return Laurent::constant(Scalar::from_int(1, field_), entry_step()); }

  /// Whether the base ring has a nonzero component in degree d.
  bool base_has_degree(std::int64_t d) const { return is_laurent() ? d % *laurent_step_ == 0 : d == 0; }

  /// Whether x is a legal base-ring element for this algebra.
  bool admits(const Laurent& x) const {
    if (x.step() != entry_step()) return false;
    return is_laurent() || x.is_constant();
  }

  friend bool operator==(const GradedMatrixAlgebra&, const GradedMatrixAlgebra&) = default;

  std::string describe() const {
    std::string out = "M_" + std::to_string(size()) + "(";
    out += is_laurent() ? "K[x^" + std::to_string(*laurent_step_) + ",x^-" + std::to_string(*laurent_step_) + "]" : "K";
    out += ")(";
    for (std::size_t k = 0; k < shifts_.size(); ++k) out += (k ? "," : "") + std::to_string(shifts_[k]);
    return out + ")";
  }

 private:
  std::optional<std::int64_t> laurent_step_;
  std::vector<std::int64_t> shifts_;
  Field field_;
};

class GradedMatrix {
 public:
  explicit GradedMatrix(GradedMatrixAlgebra alg)
      : alg_(std::move(alg)), entries_(alg_.size(), alg_.size(), alg_.zero_entry()) {}

  GradedMatrix(GradedMatrixAlgebra alg, Matrix<Laurent> entries) : alg_(std::move(alg)), entries_(std::move(entries)) {
    if (entries_.rows() != alg_.size() || entries_.cols() != alg_.size()) {
      throw MismatchError("entry matrix shape does not match " + alg_.describe());
    }
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (!alg_.admits(entries_(i, j))) throw MismatchError("entry ring does not match " + alg_.describe());
      }
    }
  }

  static GradedMatrix zero(const GradedMatrixAlgebra& alg) { return GradedMatrix(alg); }

  static GradedMatrix identity(const GradedMatrixAlgebra& alg) {
    GradedMatrix m(alg);
    for (std::size_t i = 0; i < alg.size(); ++i) m.entries_(i, i) = alg.one_entry();
    return m;
  }

  /// e_ij(x), indices zero-based.
  static GradedMatrix unit(const GradedMatrixAlgebra& alg, std::size_t i, std::size_t j, const Laurent& x) {
    if (i >= alg.size() || j >= alg.size()) throw InputError("matrix unit index out of range");
    if (!alg.admits(x)) throw MismatchError("entry ring does not match " + alg.describe());
    GradedMatrix m(alg);
    m.entries_(i, j) = x;
    return m;
  }

  static GradedMatrix unit(const GradedMatrixAlgebra& alg, std::size_t i, std::size_t j) {
    return unit(alg, i, j, alg.one_entry());
  }

  const GradedMatrixAlgebra& algebra() const { return alg_; }
  std::size_t size() const { return alg_.size(); }
  const Matrix<Laurent>& entries() const { return entries_; }
  const Laurent& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  bool is_zero() const { return entries_.is_zero(); }

  void set(std::size_t i, std::size_t j, const Laurent& x) {
    if (!alg_.admits(x)) throw MismatchError("entry ring does not match " + alg_.describe());
    entries_(i, j) = x;
  }

  friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
    a.check_same(b);
    return GradedMatrix(a.alg_, a.entries_ + b.entries_, trusted{});
  }

  friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
    a.check_same(b);
    return GradedMatrix(a.alg_, a.entries_ - b.entries_, trusted{});
  }

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    a.check_same(b);
    return GradedMatrix(a.alg_, a.entries_ * b.entries_, trusted{});
  }

  friend GradedMatrix operator*(const Scalar& s, const GradedMatrix& a) {
    return GradedMatrix(a.alg_, a.entries_.map([&](const Laurent& x) { return s * x; }), trusted{});
  }

  GradedMatrix& operator+=(const GradedMatrix& o) { return *this = *this + o; }

  /// Transpose with x^k -> x^-k, the matrix counterpart of the ghost involution.
  GradedMatrix star() const {
    return GradedMatrix(alg_, entries_.transpose().map([](const Laurent& x) { return x.bar(); }), trusted{});
  }

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.alg_ == b.alg_ && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < size(); ++i) {
      out += i ? "; " : "";
      for (std::size_t j = 0; j < size(); ++j) out += (j ? ", " : "") + entries_(i, j).to_string();
    }
    return out + "]";
  }

 private:
  struct trusted {};
  GradedMatrix(GradedMatrixAlgebra alg, Matrix<Laurent> entries, trusted)
      : alg_(std::move(alg)), entries_(std::move(entries)) {}

  void check_same(const GradedMatrix& o) const {
    if (!(alg_ == o.alg_)) throw MismatchError("matrices from different algebras: " + alg_.describe() + " vs " +
                                               o.alg_.describe());
  }

  GradedMatrixAlgebra alg_;
  Matrix<Laurent> entries_;
};

/// deg e_ij(x) = deg x + delta_i - delta_j for homogeneous nonzero x.
inline std::int64_t unit_degree(const GradedMatrixAlgebra& alg, std::size_t i, std::size_t j, const Laurent& x) {
  if (i >= alg.size() || j >= alg.size()) throw InputError("matrix unit index out of range");
  if (!alg.admits(x)) throw MismatchError("entry ring does not match " + alg.describe());
  if (!x.is_monomial()) throw PreconditionError("unit_degree needs a nonzero homogeneous base element");
  return x.min_exponent() + alg.shift(i) - alg.shift(j);
}

/// Every nonzero entry (i, j) lies in the base component of degree lambda + delta_j - delta_i.
inline bool is_homogeneous(const GradedMatrix& m, std::int64_t lambda) {
  const auto& alg = m.algebra();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const Laurent& x = m(i, j);
      if (x.is_zero()) continue;
      const std::int64_t wanted = lambda + alg.shift(j) - alg.shift(i);
      if (!alg.base_has_degree(wanted) || !x.is_monomial() || x.min_exponent() != wanted) return false;
    }
  }
  return true;
}

/// The degree of a nonzero homogeneous matrix; nullopt for zero or inhomogeneous input.
inline std::optional<std::int64_t> homogeneous_degree(const GradedMatrix& m) {
  const auto& alg = m.algebra();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const Laurent& x = m(i, j);
      if (x.is_zero()) continue;
      if (!x.is_monomial()) return std::nullopt;
      const std::int64_t lambda = x.min_exponent() + alg.shift(i) - alg.shift(j);
      return is_homogeneous(m, lambda) ? std::optional(lambda) : std::nullopt;
    }
  }
  return std::nullopt;
}

/// dim_K of the degree-lambda component.
inline std::size_t hom_component_dim(const GradedMatrixAlgebra& alg, std::int64_t lambda) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    for (std::size_t j = 0; j < alg.size(); ++j) {
      if (alg.base_has_degree(lambda + alg.shift(j) - alg.shift(i))) ++count;
    }
  }
  return count;
}

}  // namespace lpa
