#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "hk/poly.hpp"
#include "hk/rational.hpp"

namespace hk {

/// Element of Q(t) as num/den with gcd(num, den) = 1 and den monic, so equal
/// elements have identical representations.
class RatFunc {
 public:
  using Poly = hk::Poly<Rational>;

  RatFunc() : den_(Poly::constant(Rational(1))) {}
  RatFunc(long n) : num_(Poly::constant(Rational(n))), den_(Poly::constant(Rational(1))) {}  // NOLINT
  RatFunc(int n) : RatFunc(static_cast<long>(n)) {}                                           // NOLINT
  RatFunc(const Rational& r) : num_(Poly::constant(r)), den_(Poly::constant(Rational(1))) {}  // NOLINT
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(Rational(1))) {}
  RatFunc(Poly num, Poly den);

  /// The uniformizer t.
  static RatFunc t() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// `t^2 + 1` or `(t^2 + 1)/(t + 2)`.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

  /// Rational expression in `t` built from integers, + - * / ^ and parentheses.
  static RatFunc parse(std::string_view s);

 private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline std::string to_string(const RatFunc& r) { return r.to_string(); }
CoeffText format_coeff(const RatFunc& r);

/// Order of vanishing at t = 0 of a nonzero polynomial.
int order_at_zero(const Poly<Rational>& p);

/// Monic gcd in Q[t] through a primitive remainder sequence over Z.
Poly<Rational> qpoly_gcd(const Poly<Rational>& f, const Poly<Rational>& g);

}  // namespace hk
