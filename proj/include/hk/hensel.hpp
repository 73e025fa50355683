#pragma once

#include <cstddef>
#include <vector>

#include "hk/error.hpp"
#include "hk/poly.hpp"
#include "hk/valued_field.hpp"

namespace hk {

/// (f, a) with f monic over V, f(a) in the radical and f'(a) a unit.
template <class E>
struct HenselCode {
  Poly<E> f;
  E a;
};

template <ValuedField F>
bool check_hensel_code(const Poly<typename F::Elem>& f, const typename F::Elem& a, const F& field) {
  if (!f.is_monic() || !coeffs_in_V(f, field) || !in_V(a, field)) return false;
  return field.valuation(f(a)) >= Val(1) && field.valuation(derivative(f)(a)) == Val(0);
}

template <ValuedField F>
HenselCode<typename F::Elem> make_hensel_code(Poly<typename F::Elem> f, typename F::Elem a, const F& field) {
  if (!check_hensel_code(f, a, field)) throw Error(ErrorCode::NotHenselCode, "(" + pretty(f) + ", " + to_string(a) + ")");
  return {std::move(f), std::move(a)};
}

/// Output of the special-polynomial transform of
///   f = a0 + a1 X + ... + an X^n,  v(a0) >= 1, v(a1) = 0.
///
/// g = X^n - X^{n-1} + a0 * l(X) is special, g1 = g(X + 1) is a Hensel
/// polynomial with Hensel zero mu, delta = 1 + mu is the special zero of g and
///   gamma = -a0 / (a1 * delta)
/// is the zero of f in the radical of the step ring over g1.
template <class E>
struct SpecialData {
  Poly<E> f;
  Poly<E> g;
  Poly<E> g1;
  std::size_t n = 0;
  E a0;
  E a1;

  /// gamma = gamma_num / gamma_den(x) with gamma_den = 1 + x (that is, delta).
  E gamma_num() const { return -a0 / a1; }
  Poly<E> gamma_den() const { return Poly<E>({E(1), E(1)}); }
};

namespace detail {

/// X^n * f(c / X) computed by substitution and reversal.
template <class E>
Poly<E> reversed_substitution(const Poly<E>& f, const E& c, std::size_t n) {
  std::vector<E> out(n + 1);
  E ck(1);
  for (std::size_t k = 0; k <= n; ++k) {
    out[n - k] = f[k] * ck;
    ck *= c;
  }
  return Poly<E>(std::move(out));
}

}  // namespace detail

template <ValuedField F>
SpecialData<typename F::Elem> make_special(const Poly<typename F::Elem>& f, const F& field) {
  using E = typename F::Elem;
  const E a0 = f[0], a1 = f[1];
  if (f.degree() < 1 || !coeffs_in_V(f, field) || field.valuation(a0) < Val(1) || field.valuation(a1) != Val(0)) {
    throw Error(ErrorCode::NotTrick1Shape, "need coefficients in V, v(a0) >= 1 and v(a1) = 0: " + pretty(f));
  }
  const std::size_t n = static_cast<std::size_t>(f.degree());

  std::vector<E> c(n + 1);
  c[n] = E(1);
  c[n - 1] = E(-1);
  const E inv_a1 = E(1) / a1;
  // coefficient of X^{n-k}: (-1)^k a0^{k-1} a1^{-k} a_k
  E a0_pow(1);                 // a0^{k-1}
  E inv_a1_pow = inv_a1 * inv_a1;  // a1^{-k}
  for (std::size_t k = 2; k <= n; ++k) {
    a0_pow *= a0;
    E term = a0_pow * inv_a1_pow * f[k];
    c[n - k] += (k % 2) ? -term : term;
    inv_a1_pow *= inv_a1;
  }
  SpecialData<E> out;
  out.f = f;
  out.g = Poly<E>(std::move(c));
  out.g1 = shift_compose(out.g, E(1));
  out.n = n;
  out.a0 = a0;
  out.a1 = a1;

  // a0 * g(X) == X^n f(-a0 / (a1 X))
  if (out.g * a0 != detail::reversed_substitution(f, E(-a0 / a1), n)) {
    throw Error(ErrorCode::Internal, "special polynomial identity failed for " + pretty(f));
  }
  if (!check_hensel_code(out.g1, E(), field)) {
    throw Error(ErrorCode::Internal, "shifted special polynomial is not a Hensel polynomial");
  }
  return out;
}

/// The Newton iterates x_0 = a, x_{k+1} = x_k - f(x_k)/f'(x_k), k <= steps.
template <ValuedField F>
std::vector<typename F::Elem> newton_iterates(const HenselCode<typename F::Elem>& code, std::size_t steps,
                                              const F& field) {
  if (!check_hensel_code(code.f, code.a, field)) throw Error(ErrorCode::NotHenselCode, pretty(code.f));
  const auto df = derivative(code.f);
  std::vector<typename F::Elem> xs{code.a};
  for (std::size_t k = 0; k < steps; ++k) {
    const auto& x = xs.back();
    const auto fx = code.f(x);
    if (is_zero(fx)) break;
    xs.push_back(x - fx / df(x));
  }
  return xs;
}

/// An approximation â of the Hensel zero with v(f(â)) >= precision and
/// v(â - a) >= 1. Exact rational iteration; precision is tracked by valuation
/// only.
template <ValuedField F>
typename F::Elem newton_lift(const HenselCode<typename F::Elem>& code, long precision, const F& field) {
  if (!check_hensel_code(code.f, code.a, field)) throw Error(ErrorCode::NotHenselCode, pretty(code.f));
  if (precision < 1) throw Error(ErrorCode::InvalidArgument, "precision must be >= 1");
  const auto df = derivative(code.f);
  auto x = code.a;
  for (auto fx = code.f(x); field.valuation(fx) < Val(precision); fx = code.f(x)) x = x - fx / df(x);
  return x;
}

}  // namespace hk
