#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "lpa/error.hpp"

namespace lpa {

/// The coefficient field K: the rationals (modulus 0) or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }

  /// Throws ArithmeticError unless p is prime.
  static Field prime(std::uint64_t p) {
    if (!is_prime(p)) {
      throw ArithmeticError("field modulus " + std::to_string(p) + " is not prime");
    }
    Field f;
    f.modulus_ = p;
    return f;
  }

  /// Accepts "q" / "Q" or "fp:P".
  static Field parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.starts_with("fp:") || text.starts_with("Fp:")) {
      auto digits = std::string(text.substr(3));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("bad field modulus '" + digits + "'");
      }
      return prime(std::stoull(digits));
    }
    throw InputError("unknown field '" + std::string(text) + "' (expected q or fp:P)");
  }

  constexpr std::uint64_t modulus() const { return modulus_; }
  constexpr bool is_rational() const { return modulus_ == 0; }

  std::string name() const { return is_rational() ? "Q" : "F_" + std::to_string(modulus_); }

  friend constexpr bool operator==(Field, Field) = default;

  static constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  friend class Scalar;

  static constexpr Field trusted(std::uint64_t p) {
    Field f;
    f.modulus_ = p;
    return f;
  }

  std::uint64_t modulus_ = 0;
};

/// An exact element of K.
///
/// Rationals are kept in lowest terms by GMP. Residues live in [0, p).
/// A rational operand meeting an F_p operand is reduced into F_p, so integer
/// literals such as Scalar(1) work in every field; two different primes never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT: integer literals are scalars
  explicit Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

  static Scalar from_int(long value, Field field) { return Scalar(value).in(field); }

  static Scalar parse(std::string_view text, Field field) {
    mpq_class value;
    if (value.set_str(std::string(text), 10) != 0) {
      throw InputError("bad scalar '" + std::string(text) + "'");
    }
    if (value.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return Scalar(std::move(value)).in(field);
  }

  /// The image of this value in `field`.
  Scalar in(Field field) const {
    if (field.modulus() == mod_) return *this;
    if (mod_ != 0) throw MismatchError("cannot move an F_" + std::to_string(mod_) + " value into " + field.name());
    Scalar out;
    out.mod_ = field.modulus();
    out.res_ = reduce(q_, out.mod_);
    return out;
  }

  Field field() const { return Field::trusted(mod_); }
  bool is_rational() const { return mod_ == 0; }

  bool is_zero() const { return mod_ == 0 ? q_ == 0 : res_ == 0; }
  bool is_one() const { return mod_ == 0 ? q_ == 1 : res_ == 1; }

  Scalar inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    if (mod_ == 0) return Scalar(mpq_class(1) / q_);
    return residue(pow_mod(res_, mod_ - 2, mod_), mod_);
  }

  Scalar operator-() const {
    if (mod_ == 0) return Scalar(mpq_class(-q_));
    return residue(res_ == 0 ? 0 : mod_ - res_, mod_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    auto m = common(a, b);
    if (m == 0) return Scalar(mpq_class(a.q_ + b.q_));
    auto x = a.value_mod(m), y = b.value_mod(m);
    return residue(x + y >= m ? x + y - m : x + y, m);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    auto m = common(a, b);
    if (m == 0) return Scalar(mpq_class(a.q_ * b.q_));
    return residue(mul_mod(a.value_mod(m), b.value_mod(m), m), m);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    auto m = common(a, b);
    if (m == 0) return a.q_ == b.q_;
    return a.value_mod(m) == b.value_mod(m);
  }

  /// "5/6", "-2", or the residue for F_p.
  std::string to_string() const { return mod_ == 0 ? q_.get_str() : std::to_string(res_); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  static Scalar residue(std::uint64_t r, std::uint64_t m) {
    Scalar s;
    s.mod_ = m;
    s.res_ = r;
    return s;
  }

  static std::uint64_t common(const Scalar& a, const Scalar& b) {
    if (a.mod_ == b.mod_) return a.mod_;
    if (a.mod_ == 0) return b.mod_;
    if (b.mod_ == 0) return a.mod_;
    throw MismatchError("mixing F_" + std::to_string(a.mod_) + " and F_" + std::to_string(b.mod_));
  }

  std::uint64_t value_mod(std::uint64_t m) const { return mod_ == m ? res_ : reduce(q_, m); }

  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }

  static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
      if (exp & 1) result = mul_mod(result, base, m);
      base = mul_mod(base, base, m);
      exp >>= 1;
    }
    return result;
  }

  static std::uint64_t reduce(const mpz_class& z, std::uint64_t m) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(z.get_mpz_t(), m);
  }

  static std::uint64_t reduce(const mpq_class& q, std::uint64_t m) {
    auto den = reduce(q.get_den(), m);
    if (den == 0) throw ArithmeticError("denominator of " + q.get_str() + " vanishes in F_" + std::to_string(m));
    return mul_mod(reduce(q.get_num(), m), pow_mod(den, m - 2, m), m);
  }

  std::uint64_t mod_ = 0;
  std::uint64_t res_ = 0;
  mpq_class q_;
};

}  // namespace lpa
