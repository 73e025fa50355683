#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hk/error.hpp"
#include "hk/hensel.hpp"
#include "hk/newton_polygon.hpp"
#include "hk/poly.hpp"
#include "hk/quotient_algebra.hpp"
#include "hk/valued_field.hpp"

namespace hk {

enum class Verdict { Zero, Nonzero };

constexpr std::string_view to_string(Verdict v) { return v == Verdict::Zero ? "zero" : "nonzero"; }

/// Trace of one zero test, for reporting.
///
/// q is the characteristic polynomial of p(x) and r that of x*p(x) in
/// K[X]/(g1). When p(mu') != 0, exactly one root valuation moves from
/// moved->first in q to moved->second = moved->first + v(mu') in r.
template <class E>
struct ZeroTestReport {
  Verdict verdict = Verdict::Zero;
  Poly<E> q;
  Poly<E> r;
  NewtonPolygon q_polygon;
  NewtonPolygon r_polygon;
  RootValMultiset q_roots;
  RootValMultiset r_roots;
  std::optional<std::pair<RootVal, RootVal>> moved;
  Val valuation = Val::inf();  // v(p(mu'))
};

/// num/den with den in S = 1 + m + <x>, read at the Hensel zero mu'.
///
/// Numerators may carry coefficients from K (inverses produced by
/// StepRing::invert do); whether the value lies in the valuation ring is
/// then answered by StepRing::in_W.
template <class E>
struct StepElement {
  Poly<E> num;
  Poly<E> den;
};

/// The ring V_{g1} = S^{-1} V[x], x the class of X modulo the Hensel
/// polynomial g1, S = 1 + m + <x>.
///
/// Equality and valuation are decided at the Hensel zero mu' of g1 from the
/// Newton polygons of characteristic polynomials; no root of g1 is ever
/// computed. Requires every root of g1 other than mu' to be a unit, which
/// new_step verifies on the Newton polygon of g1.
template <ValuedField F>
class StepRing {
 public:
  using E = typename F::Elem;
  using P = Poly<E>;
  using Element = StepElement<E>;

  const F& field() const { return field_; }
  const P& g1() const { return algebra_.modulus(); }
  const QuotientAlgebra<E>& algebra() const { return algebra_; }
  /// v(mu') = v(g1(0)); inf when g1(0) = 0, i.e. mu' = 0.
  Val v_mu() const { return v_mu_; }

  ZeroTestReport<E> is_zero(const P& p) const {
    ZeroTestReport<E> rep;
    const auto b = algebra_.reduce(p);
    rep.q = algebra_.charpoly(b);
    rep.r = algebra_.charpoly(algebra_.mul(algebra_.x(), b));
    rep.q_polygon = build_polygon(rep.q, field_);
    rep.r_polygon = build_polygon(rep.r, field_);
    rep.q_roots = root_valuations(rep.q_polygon);
    rep.r_roots = root_valuations(rep.r_polygon);

    std::vector<RootVal> lost, gained;
    for (const auto& [w, n] : rep.q_roots) {
      auto it = rep.r_roots.find(w);
      const auto m = it == rep.r_roots.end() ? 0 : it->second;
      for (auto k = m; k < n; ++k) lost.push_back(w);
    }
    for (const auto& [w, n] : rep.r_roots) {
      auto it = rep.q_roots.find(w);
      const auto m = it == rep.q_roots.end() ? 0 : it->second;
      for (auto k = m; k < n; ++k) gained.push_back(w);
    }

    const bool q0_nonzero = !hk::is_zero(rep.q[0]);
    if (lost.empty() && gained.empty()) {
      if (q0_nonzero) throw Error(ErrorCode::Internal, "q(0) != 0 but no root valuation moved");
      rep.verdict = Verdict::Zero;
      rep.valuation = Val::inf();
      return rep;
    }
    if (lost.size() != 1 || gained.size() != 1 || !lost[0].is_integer() ||
        gained[0] != lost[0] + RootVal(v_mu_)) {
      throw Error(ErrorCode::Internal, "inconsistent root valuation shift; is every other root of g1 a unit?");
    }
    rep.verdict = Verdict::Nonzero;
    rep.moved = std::pair{lost[0], gained[0]};
    rep.valuation = Val(lost[0].value().get_num().get_si());
    return rep;
  }

  Val valuation_of(const P& p) const { return is_zero(p).valuation; }
  Val valuation_of(const Element& u) const { return valuation_of(u.num) - valuation_of(u.den); }

  /// v(p(mu')) >= 0, for p over K: clear denominators with a power of pi.
  bool in_W(const P& p) const {
    const Val m = min_valuation(p, field_);
    if (m.is_inf()) return true;
    const long k = m.value() < 0 ? -m.value() : 0;
    const Val v = valuation_of(p * uniformizer_pow(field_, k));
    return v.is_inf() || v.value() - k >= 0;
  }

  Element element(P num, P den = P::constant(E(1))) const {
    if (!coeffs_in_V(den, field_) || field_.valuation(den[0] - E(1)) < Val(1)) {
      throw Error(ErrorCode::BadDenominator, "denominator must lie in 1 + m + <x>: " + pretty(den));
    }
    return {std::move(num) % g1(), std::move(den) % g1()};
  }

  bool equal(const Element& u, const Element& w) const {
    return is_zero(u.num * w.den - w.num * u.den).verdict == Verdict::Zero;
  }

  Element add(const Element& u, const Element& w) const {
    return {(u.num * w.den + w.num * u.den) % g1(), (u.den * w.den) % g1()};
  }
  Element sub(const Element& u, const Element& w) const {
    return {(u.num * w.den - w.num * u.den) % g1(), (u.den * w.den) % g1()};
  }
  Element mul(const Element& u, const Element& w) const {
    return {(u.num * w.num) % g1(), (u.den * w.den) % g1()};
  }

  /// f(u) for a polynomial f over K.
  Element evaluate(const P& f, const Element& u) const {
    const auto n = static_cast<std::size_t>(std::max(f.degree(), 0));
    P num;
    P num_pow = P::constant(E(1));
    for (std::size_t k = 0; k <= n; ++k) {
      num += (f[k] * num_pow * pow(u.den, n - k)) % g1();
      num_pow = (num_pow * u.num) % g1();
    }
    return {num % g1(), pow(u.den, n) % g1()};
  }

  /// Inverse of a unit. The numerator is inverted by gcd refinement of the
  /// modulus, using this ring's zero test as the vanishing oracle.
  Element invert(const Element& u) const {
    if (valuation_of(u) != Val(0)) throw Error(ErrorCode::NotAUnit, "element of valuation " + valuation_of(u).to_string());
    auto inv = invert_refine<E>(algebra_.reduce(u.num), algebra_,
                                [this](const P& p) { return is_zero(p).verdict == Verdict::Zero; });
    return {(u.den * inv.inverse) % g1(), P::constant(E(1))};
  }

 private:
  template <ValuedField G>
  friend StepRing<G> new_step(Poly<typename G::Elem> g1, G field);

  StepRing(P g1, F field, Val v_mu) : field_(std::move(field)), algebra_(std::move(g1)), v_mu_(v_mu) {}

  F field_;
  QuotientAlgebra<E> algebra_;
  Val v_mu_;
};

/// Builds the step ring of a Hensel polynomial g1. The side condition that
/// every other root of g1 is a unit is read off the Newton polygon of g1:
/// its root valuations must be {v(g1(0)) x 1, 0 x (deg g1 - 1)}.
template <ValuedField F>
StepRing<F> new_step(Poly<typename F::Elem> g1, F field) {
  using E = typename F::Elem;
  if (!check_hensel_code(g1, E(), field)) throw Error(ErrorCode::NotHenselCode, "(" + pretty(g1) + ", 0)");
  const Val v_mu = field.valuation(g1[0]);
  RootValMultiset expected{{RootVal(v_mu), 1}};
  if (g1.degree() > 1) expected[RootVal(Val(0))] = g1.degree() - 1;
  if (root_valuations(build_polygon(g1, field)) != expected) {
    throw Error(ErrorCode::UncertifiedModulus, "roots of " + pretty(g1) + " other than the Hensel zero are not all units");
  }
  return StepRing<F>(std::move(g1), std::move(field), v_mu);
}

template <ValuedField F>
StepRing<F> new_step(const SpecialData<typename F::Elem>& special, F field) {
  return new_step(special.g1, std::move(field));
}

/// Step ring over g1 = (X - rho) * prod (X - u_i), certified by the explicit
/// roots: v(rho) >= 1 and every u_i a unit.
template <ValuedField F>
StepRing<F> new_step_from_roots(const typename F::Elem& rho, const std::vector<typename F::Elem>& units, F field) {
  using E = typename F::Elem;
  if (field.valuation(rho) < Val(1)) throw Error(ErrorCode::UncertifiedModulus, "Hensel root must lie in the radical");
  Poly<E> g1({-rho, E(1)});
  for (const auto& u : units) {
    if (field.valuation(u) != Val(0)) throw Error(ErrorCode::UncertifiedModulus, "root " + to_string(u) + " is not a unit");
    g1 *= Poly<E>({-u, E(1)});
  }
  return new_step(std::move(g1), std::move(field));
}

}  // namespace hk
