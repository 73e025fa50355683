#include "hk/ratfunc.hpp"

#include "hk/error.hpp"
#include "hk/parse.hpp"

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hk {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(ZPoly& a) {
  mpz_class c = 0;
  for (const auto& x : a) c = ::gcd(c, x);
  if (c > 1) {
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
}

// Primitive integer multiple of a nonzero rational polynomial.
ZPoly to_primitive(const RatFunc::Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = ::lcm(l, c.den());
  ZPoly out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b over Z.
void pseudo_rem(ZPoly& a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= b.back();
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
}

}  // namespace

// Plain Euclid over Q lets coefficients grow much faster than this does.
Poly<Rational> qpoly_gcd(const Poly<Rational>& f, const Poly<Rational>& g) {
  if (f.is_zero() && g.is_zero()) return {};
  ZPoly a = to_primitive(f), b = to_primitive(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    pseudo_rem(a, b);
    make_primitive(a);
    std::swap(a, b);
  }
  std::vector<Rational> c;
  c.reserve(a.size());
  for (auto& x : a) c.emplace_back(std::move(x));
  return monic(RatFunc::Poly(std::move(c)));
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = qpoly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  if (!den_.is_monic()) {
    Rational inv = Rational(1) / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

namespace {

std::string wrap(const std::string& s) {
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return "(" + s + ")";
  }
  return s;
}

}  // namespace

std::string RatFunc::to_string() const {
  std::string n = pretty(num_, "t");
  if (den_.degree() == 0) return n;
  return wrap(n) + "/" + wrap(pretty(den_, "t"));
}

CoeffText format_coeff(const RatFunc& r) {
  if (!r.is_zero() && r.num().lead().sign() < 0) {
    std::string m = (-r).to_string();
    return {true, m, is_atomic_text(m)};
  }
  std::string m = r.to_string();
  return {false, m, is_atomic_text(m)};
}

RatFunc RatFunc::parse(std::string_view s) {
  ExpressionGrammar<RatFunc> g{
      [](const mpz_class& n) { return RatFunc(Rational(n)); },
      [](std::string_view id) -> std::optional<RatFunc> {
        if (id == "t") return RatFunc::t();
        return std::nullopt;
      },
      [](const RatFunc& a, const RatFunc& b) { return a / b; },
  };
  return parse_expression(s, g);
}

int order_at_zero(const Poly<Rational>& p) {
  int k = 0;
  while (static_cast<std::size_t>(k) < p.size() && p[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

}  // namespace hk
