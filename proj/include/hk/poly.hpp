#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hk/error.hpp"
#include "hk/text.hpp"

namespace hk {

namespace detail {

template <class S>
bool scalar_is_zero(const S& s) {
  return is_zero(s);
}

}  // namespace detail

/// Dense univariate polynomial over an exact field `S`.
///
/// Coefficients are stored in ascending degree order with no trailing
/// zeros; the zero polynomial has no coefficients and degree -1. `S` must be
/// a field with value semantics: default construction gives 0, `S(1)` gives
/// 1, and `is_zero(s)` / `to_string(s)` / `format_coeff(s)` are found by ADL.
template <class S>
class Poly {
 public:
  using Scalar = S;

  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const S& s) { return Poly(std::vector<S>{s}); }
  static Poly monomial(const S& s, std::size_t k) {
    std::vector<S> c(k + 1);
    c[k] = s;
    return Poly(std::move(c));
  }
  /// The indeterminate X.
  static Poly x() { return monomial(S(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<S>& coeffs() const { return c_; }

  /// Coefficient of X^i; zero beyond the degree.
  S operator[](std::size_t i) const { return i < c_.size() ? c_[i] : S(); }
  S lead() const { return c_.empty() ? S() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == S(1); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const S& s) {
    if (detail::scalar_is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Horner evaluation at `x`.
  S operator()(const S& x) const {
    S acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

template <class S>
Poly<S> derivative(const Poly<S>& f) {
  if (f.degree() < 1) return {};
  std::vector<S> d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = S(static_cast<long>(i)) * f[i];
  return Poly<S>(std::move(d));
}

template <class S>
Poly<S> pow(const Poly<S>& f, std::size_t k) {
  Poly<S> result = Poly<S>::constant(S(1));
  Poly<S> base = f;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

template <class S>
struct DivMod {
  Poly<S> quotient;
  Poly<S> remainder;
};

template <class S>
DivMod<S> divmod(const Poly<S>& a, const Poly<S>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {{}, a};
  std::vector<S> r = a.coeffs();
  const int db = b.degree();
  std::vector<S> q(static_cast<std::size_t>(a.degree() - db + 1));
  const S inv_lead = S(1) / b.lead();
  const bool monic = b.is_monic();
  for (int k = a.degree() - db; k >= 0; --k) {
    const S& top = r[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    S factor = monic ? top : top * inv_lead;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= factor * b[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(k)] = std::move(factor);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<S>(std::move(q)), Poly<S>(std::move(r))};
}

template <class S>
Poly<S> operator/(const Poly<S>& a, const Poly<S>& b) {
  return divmod(a, b).quotient;
}
template <class S>
Poly<S> operator%(const Poly<S>& a, const Poly<S>& b) {
  return divmod(a, b).remainder;
}

template <class S>
Poly<S> monic(const Poly<S>& f) {
  if (f.is_zero()) return f;
  return f * (S(1) / f.lead());
}

/// Bezout certificate u*f + v*g = d with d the monic gcd.
template <class S>
struct BezoutCert {
  Poly<S> d;
  Poly<S> u;
  Poly<S> v;
};

/// Extended Euclid over the field of coefficients.
template <class S>
BezoutCert<S> gcd_bezout(const Poly<S>& f, const Poly<S>& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::GcdOfZeros, "gcd of two zero polynomials");
  Poly<S> r0 = f, r1 = g;
  Poly<S> s0 = Poly<S>::constant(S(1)), s1;
  Poly<S> t0, t1 = Poly<S>::constant(S(1));
  // Remainders are kept monic; the cofactors are scaled along with them.
  auto normalise = [](Poly<S>& r, Poly<S>& s, Poly<S>& t) {
    if (r.is_zero() || r.is_monic()) return;
    const S inv = S(1) / r.lead();
    r *= inv;
    s *= inv;
    t *= inv;
  };
  normalise(r0, s0, t0);
  normalise(r1, s1, t1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    Poly<S> s2 = s0 - q * s1;
    s0 = std::exchange(s1, std::move(s2));
    Poly<S> t2 = t0 - q * t1;
    t0 = std::exchange(t1, std::move(t2));
    normalise(r1, s1, t1);
  }
  return {r0, s0, t0};
}

template <class S>
Poly<S> gcd(const Poly<S>& f, const Poly<S>& g) {
  if (f.is_zero() && g.is_zero()) return {};
  Poly<S> a = f.is_zero() ? f : monic(f), b = g.is_zero() ? g : monic(g);
  while (!b.is_zero()) {
    Poly<S> r = a % b;
    a = std::exchange(b, r.is_zero() ? r : monic(r));
  }
  return a;
}

/// f(X + c).
template <class S>
Poly<S> shift_compose(const Poly<S>& f, const S& c) {
  const Poly<S> lin({c, S(1)});
  Poly<S> acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * lin + Poly<S>::constant(f[static_cast<std::size_t>(i)]);
  return acc;
}

/// f(g(X)).
template <class S>
Poly<S> compose(const Poly<S>& f, const Poly<S>& g) {
  Poly<S> acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + Poly<S>::constant(f[static_cast<std::size_t>(i)]);
  return acc;
}

/// Coefficients g_0(Y), ..., g_{d-1}(Y) of
///   (f(X) - f(Y)) / (X - Y) = sum_j g_j(Y) X^j
/// for monic f of degree d >= 1.
template <class S>
std::vector<Poly<S>> difference_quotient(const Poly<S>& f) {
  if (f.degree() < 1 || !f.is_monic()) {
    throw Error(ErrorCode::BadModulus, "difference quotient needs a monic non-constant polynomial");
  }
  const std::size_t d = static_cast<std::size_t>(f.degree());
  std::vector<Poly<S>> g(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<S> c(d - j);
    for (std::size_t k = j + 1; k <= d; ++k) c[k - 1 - j] = f[k];
    g[j] = Poly<S>(std::move(c));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Text forms

/// Comma-separated ascending coefficients, e.g. `5,1,1`; `0` for zero.
template <class S>
std::string to_coeff_string(const Poly<S>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += to_string(f[i]);
  }
  return out;
}

/// Human-readable form, highest degree first: `X^2 + X + 5`.
template <class S>
std::string pretty(const Poly<S>& f, const std::string& var = "X") {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const S c = f[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    CoeffText t = format_coeff(c);
    if (first) {
      if (t.negative) out += '-';
    } else {
      out += t.negative ? " - " : " + ";
    }
    first = false;
    const bool unit = t.magnitude == "1";
    std::string mono;
    if (i >= 1) mono = var;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (i == 0) {
      out += t.atomic ? t.magnitude : "(" + t.magnitude + ")";
    } else if (unit) {
      out += mono;
    } else {
      out += (t.atomic ? t.magnitude : "(" + t.magnitude + ")") + "*" + mono;
    }
  }
  return out;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Poly<S>& f) {
  return os << pretty(f);
}

}  // namespace hk
