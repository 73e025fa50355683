#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hk/text.hpp"

namespace hk {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over mpq_class; it exists so that arithmetic returns
/// concrete values instead of gmpxx expression templates, which keeps it
/// usable as an Eigen scalar and inside generic polynomial code.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : q_(n) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(mpz_class n) : q_(std::move(n)) {}
  Rational(mpz_class num, mpz_class den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& get() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  /// `a` or `a/b`.
  std::string to_string() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  /// Parses `[-]digits[/digits]`; surrounding whitespace is ignored.
  /// Throws ParseError (position = 1-based column) on malformed input.
  static Rational parse(std::string_view s);

 private:
  mpq_class q_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline std::string to_string(const Rational& r) { return r.to_string(); }
inline CoeffText format_coeff(const Rational& r) {
  if (r.sign() < 0) return {true, (-r).to_string(), true};
  return {false, r.to_string(), true};
}

Rational pow(const Rational& base, long exponent);

}  // namespace hk

