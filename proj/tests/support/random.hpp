#pragma once

// Random generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "hk/poly.hpp"
#include "hk/ratfunc.hpp"
#include "hk/rational.hpp"
#include "hk/valued_field.hpp"

namespace hk::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

 private:
  std::mt19937_64 gen_;
};

// --- p-adic -----------------------------------------------------------------

inline long nonmultiple(Rng& rng, long p, long lo, long hi) {
  for (;;) {
    long a = rng.uniform(lo, hi);
    if (a != 0 && a % p != 0) return a;
  }
}

inline Rational random_unit(const PadicField& f, Rng& rng) {
  const long p = f.prime().get_si();
  long num = nonmultiple(rng, p, -30, 30);
  long den = rng.coin(0.6) ? 1 : nonmultiple(rng, p, 1, 30);
  return Rational(mpz_class(num), mpz_class(den));
}

// --- t-adic -----------------------------------------------------------------

inline Poly<Rational> random_qt_poly(Rng& rng, int max_deg, bool nonzero_constant) {
  std::vector<Rational> c(static_cast<std::size_t>(rng.uniform(0, max_deg)) + 1);
  for (auto& a : c) a = Rational(rng.uniform(-4, 4));
  if (nonzero_constant && c[0].is_zero()) c[0] = Rational(rng.coin() ? 1 : -2);
  return Poly<Rational>(std::move(c));
}

inline RatFunc random_unit(const TadicField&, Rng& rng) {
  auto num = random_qt_poly(rng, 2, true);
  if (rng.coin(0.7)) return RatFunc(num);
  return RatFunc(num, random_qt_poly(rng, 1, true));
}

// --- generic ----------------------------------------------------------------

/// u * pi^v for a random unit u.
template <ValuedField F>
typename F::Elem random_with_valuation(const F& f, Rng& rng, long v) {
  return random_unit(f, rng) * uniformizer_pow(f, v);
}

/// Element of V; zero with probability p_zero.
template <ValuedField F>
typename F::Elem random_V(const F& f, Rng& rng, double p_zero = 0.1) {
  if (rng.coin(p_zero)) return typename F::Elem();
  return random_with_valuation(f, rng, rng.uniform(0, 2));
}

/// Element of K; zero with probability p_zero.
template <ValuedField F>
typename F::Elem random_K(const F& f, Rng& rng, double p_zero = 0.1) {
  if (rng.coin(p_zero)) return typename F::Elem();
  return random_with_valuation(f, rng, rng.uniform(-2, 2));
}

template <ValuedField F>
Poly<typename F::Elem> random_poly_V(const F& f, Rng& rng, int deg) {
  std::vector<typename F::Elem> c(static_cast<std::size_t>(deg) + 1);
  for (auto& a : c) a = random_V(f, rng);
  return Poly<typename F::Elem>(std::move(c));
}

template <ValuedField F>
Poly<typename F::Elem> random_poly_K(const F& f, Rng& rng, int deg) {
  std::vector<typename F::Elem> c(static_cast<std::size_t>(deg) + 1);
  for (auto& a : c) a = random_K(f, rng);
  return Poly<typename F::Elem>(std::move(c));
}

template <ValuedField F>
Poly<typename F::Elem> random_monic_K(const F& f, Rng& rng, int deg) {
  auto p = random_poly_K(f, rng, deg - 1);
  return p + Poly<typename F::Elem>::monomial(typename F::Elem(1), static_cast<std::size_t>(deg));
}

template <ValuedField F>
Poly<typename F::Elem> random_monic_V(const F& f, Rng& rng, int deg) {
  auto p = random_poly_V(f, rng, deg - 1);
  return p + Poly<typename F::Elem>::monomial(typename F::Elem(1), static_cast<std::size_t>(deg));
}

template <class E>
Poly<E> from_roots(const std::vector<E>& roots) {
  Poly<E> f = Poly<E>::constant(E(1));
  for (const auto& r : roots) f *= Poly<E>({-r, E(1)});
  return f;
}

}  // namespace hk::testing
