#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "lpa/error.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// An element of K[x^t, x^-t], stored sparsely as exponent -> coefficient.
///
/// Every exponent is a multiple of the step t and no stored coefficient is zero,
/// so equality of elements is equality of term maps. The grading puts x^k in
/// degree k: the degree-k component is the single term at exponent k.
class Laurent {
 public:
  using Terms = std::map<std::int64_t, Scalar>;

  explicit Laurent(std::int64_t step = 1) : step_(step) {
    if (step <= 0) throw ArithmeticError("Laurent step must be positive");
  }

  static Laurent constant(const Scalar& c, std::int64_t step = 1) { return monomial(c, 0, step); }

  static Laurent monomial(const Scalar& c, std::int64_t exponent, std::int64_t step = 1) {
    Laurent out(step);
    out.check_exponent(exponent);
    if (!c.is_zero()) out.terms_.emplace(exponent, c);
    return out;
  }

  std::int64_t step() const { return step_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  /// Coefficient of x^exponent (zero when absent).
  Scalar coeff(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  std::int64_t min_exponent() const { return terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }

  /// Euclidean size in the variable y = x^t: (max - min) / t. Monomials have size 0.
  std::int64_t euclidean_size() const { return is_zero() ? -1 : (max_exponent() - min_exponent()) / step_; }

  /// Units of a Laurent ring over a field are exactly the nonzero monomials.
  bool is_unit() const { return is_monomial(); }

  void add_term(std::int64_t exponent, const Scalar& c) {
    check_exponent(exponent);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Laurent operator-() const {
    Laurent out(step_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    a.check_step(b);
    Laurent out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_step(b);
    Laurent out(a.step_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  friend Laurent operator*(const Scalar& s, const Laurent& a) {
    Laurent out(a.step_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
    return out;
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.step_ == b.step_ && a.terms_ == b.terms_;
  }

  /// Inverse of a unit c*x^k, namely c^-1 * x^-k.
  Laurent unit_inverse() const {
    if (!is_unit()) throw ArithmeticError("not a unit of the Laurent ring: " + to_string());
    const auto& [e, c] = *terms_.begin();
    return monomial(c.inverse(), -e, step_);
  }

  /// The Laurent involution x^k -> x^-k.
  Laurent bar() const {
    Laurent out(step_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  /// Division with remainder: *this = divisor * quotient + remainder with
  /// euclidean_size(remainder) < euclidean_size(divisor). Both are shifted to
  /// polynomials in y = x^t, divided, then shifted back.
  std::pair<Laurent, Laurent> divmod(const Laurent& divisor) const {
    check_step(divisor);
    if (divisor.is_zero()) throw ArithmeticError("Laurent division by zero");
    Laurent quotient(step_);
    Laurent remainder = *this;
    const std::int64_t dmax = divisor.max_exponent();
    const std::int64_t dmin = divisor.min_exponent();
    const Scalar lead_inv = divisor.terms_.rbegin()->second.inverse();
    // Cancel the top term of the remainder until it is shorter than the divisor,
    // measured relative to the remainder's fixed bottom exponent.
    if (remainder.is_zero()) return {quotient, remainder};
    const std::int64_t base = remainder.min_exponent();
    while (!remainder.is_zero() && remainder.max_exponent() - base >= dmax - dmin) {
      const std::int64_t shift = remainder.max_exponent() - dmax;
      const Scalar factor = remainder.terms_.rbegin()->second * lead_inv;
      Laurent term = monomial(factor, shift, step_);
      quotient += term;
      remainder -= term * divisor;
    }
    return {quotient, remainder};
  }

  bool divides(const Laurent& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
  }

  /// "2*x^4 + 1/3*x^-2" style, highest exponent first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += it->second.to_string();
      if (it->first != 0) out += "*x^" + std::to_string(it->first);
    }
    return out;
  }

 private:
  void check_exponent(std::int64_t exponent) const {
    if (exponent % step_ != 0) {
      throw ArithmeticError("exponent " + std::to_string(exponent) + " is not a multiple of step " +
                            std::to_string(step_));
    }
  }

  void check_step(const Laurent& other) const {
    if (other.step_ != step_) {
      throw MismatchError("Laurent step mismatch: " + std::to_string(step_) + " vs " + std::to_string(other.step_));
    }
  }

  std::int64_t step_;
  Terms terms_;
};

}  // namespace lpa
