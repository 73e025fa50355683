#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hk/poly.hpp"
#include "hk/ratfunc.hpp"
#include "hk/rational.hpp"
#include "hk/val.hpp"

namespace hk {

/// A discrete valued field (K, V): exact elements of K plus the valuation
/// whose non-negative part is V. Elements are context free; the field object
/// carries the runtime data (the prime for the p-adic instance).
template <class F>
concept ValuedField = requires(const F& f, const typename F::Elem& a, std::string_view s) {
  { f.valuation(a) } -> std::same_as<Val>;
  { f.uniformizer() } -> std::same_as<typename F::Elem>;
  { f.parse_elem(s) } -> std::same_as<typename F::Elem>;
  { f.symbol(s) } -> std::same_as<std::optional<typename F::Elem>>;
  { f.name() } -> std::convertible_to<std::string>;
};

/// Q with the p-adic valuation; V = Z localised at p.
class PadicField {
 public:
  using Elem = Rational;

  explicit PadicField(mpz_class p);
  explicit PadicField(long p) : PadicField(mpz_class(p)) {}

  const mpz_class& prime() const { return p_; }

  Val valuation(const Rational& a) const;
  Rational uniformizer() const { return Rational(p_); }
  Rational parse_elem(std::string_view s) const { return Rational::parse(s); }
  std::optional<Rational> symbol(std::string_view) const { return std::nullopt; }
  std::string name() const { return "padic:" + p_.get_str(); }

 private:
  mpz_class p_;
};

/// Q(t) with the t-adic valuation (order of vanishing at t = 0).
class TadicField {
 public:
  using Elem = RatFunc;

  Val valuation(const RatFunc& a) const;
  RatFunc uniformizer() const { return RatFunc::t(); }
  RatFunc parse_elem(std::string_view s) const { return RatFunc::parse(s); }
  std::optional<RatFunc> symbol(std::string_view s) const {
    if (s == "t") return RatFunc::t();
    return std::nullopt;
  }
  std::string name() const { return "tadic"; }
};

using AnyField = std::variant<PadicField, TadicField>;

/// `padic:<p>` (p prime) or `tadic`.
AnyField parse_field(std::string_view spec);

enum class ValClass { Unit, Radical, OutsideV, Zero };

constexpr std::string_view to_string(ValClass c) {
  switch (c) {
    case ValClass::Unit: return "UNIT";
    case ValClass::Radical: return "RADICAL";
    case ValClass::OutsideV: return "OUTSIDE_V";
    case ValClass::Zero: return "ZERO";
  }
  return "?";
}

template <ValuedField F>
ValClass classify(const typename F::Elem& a, const F& field) {
  const Val v = field.valuation(a);
  if (v.is_inf()) return ValClass::Zero;
  if (v.value() < 0) return ValClass::OutsideV;
  return v.value() == 0 ? ValClass::Unit : ValClass::Radical;
}

template <ValuedField F>
bool in_V(const typename F::Elem& a, const F& field) {
  return field.valuation(a) >= Val(0);
}

/// Whether a = x*b for some x in V.
template <ValuedField F>
bool divides_in_V(const typename F::Elem& a, const typename F::Elem& b, const F& field) {
  if (is_zero(b)) return is_zero(a);
  return field.valuation(a) >= field.valuation(b);
}

/// Minimum coefficient valuation; inf for the zero polynomial.
template <ValuedField F>
Val min_valuation(const Poly<typename F::Elem>& p, const F& field) {
  Val m = Val::inf();
  for (const auto& c : p.coeffs()) m = min(m, field.valuation(c));
  return m;
}

template <ValuedField F>
bool coeffs_in_V(const Poly<typename F::Elem>& p, const F& field) {
  return min_valuation(p, field) >= Val(0);
}

/// pi^n for any integer n.
template <ValuedField F>
typename F::Elem uniformizer_pow(const F& field, long n) {
  using E = typename F::Elem;
  E base = n >= 0 ? field.uniformizer() : E(1) / field.uniformizer();
  E r(1);
  for (long k = 0; k < (n >= 0 ? n : -n); ++k) r *= base;
  return r;
}

}  // namespace hk
