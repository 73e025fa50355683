#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hk/error.hpp"
#include "hk/matrix.hpp"
#include "hk/poly.hpp"
#include "hk/quotient_algebra.hpp"
#include "hk/valued_field.hpp"

namespace hk {

/// f = g * h with g, h monic; bezout holds u*g + v*h = 1 when they are
/// coprime.
template <class S>
struct Factorisation {
  Poly<S> g;
  Poly<S> h;
  std::optional<BezoutCert<S>> bezout;
};

/// Traces t_j = tr(g_j(x) b) together with sum_j t_j x^j, which equals
/// f'(x) b in K[X]/(f).
template <class S>
struct TraceCertificate {
  std::vector<S> traces;
  Poly<S> reconstruction;
};

namespace detail {

template <class S>
Factorisation<S> coprime_factorisation(Poly<S> g, Poly<S> h) {
  Factorisation<S> out{std::move(g), std::move(h), std::nullopt};
  auto cert = gcd_bezout(out.g, out.h);
  if (cert.d.degree() == 0) out.bezout = std::move(cert);
  return out;
}

}  // namespace detail

/// Tate's trace formula: f'(x) b = sum_j tr(g_j(x) b) x^j, with g_j the
/// difference-quotient coefficients of the modulus. Throws an internal
/// error if the two sides differ.
template <class S>
TraceCertificate<S> tate_identity_check(const AlgebraElement<S>& b, const QuotientAlgebra<S>& q) {
  const auto& f = q.modulus();
  const auto gs = difference_quotient(f);
  TraceCertificate<S> cert;
  cert.traces.reserve(gs.size());
  for (const auto& gj : gs) cert.traces.push_back(q.trace(q.mul(q.reduce(gj), b)));
  cert.reconstruction = Poly<S>(cert.traces);
  if (q.reduce(derivative(f) * b.rep).rep != cert.reconstruction) {
    throw Error(ErrorCode::Internal, "trace formula failed for modulus " + pretty(f));
  }
  return cert;
}

/// f = g h with b nilpotent modulo g and a unit modulo h. g is
/// gcd(f, b^{deg f}), found by stripping common factors of b off f until
/// none remain; this avoids forming the power.
template <class S>
Factorisation<S> unit_nilpotent_split(const AlgebraElement<S>& b, const Poly<S>& f) {
  if (!f.is_monic()) throw Error(ErrorCode::BadModulus, "split needs a monic polynomial");
  Poly<S> g = Poly<S>::constant(S(1));
  Poly<S> h = f;
  while (h.degree() > 0) {
    const Poly<S> d = gcd(h, b.rep % h);
    if (d.degree() == 0) break;
    g *= d;
    h = h / d;
  }
  return detail::coprime_factorisation(std::move(g), std::move(h));
}

/// f = g h with h separable and g dividing a power of f' (char 0).
template <class S>
Factorisation<S> separable_split(const Poly<S>& f) {
  if (!f.is_monic()) throw Error(ErrorCode::BadModulus, "split needs a monic polynomial");
  return unit_nilpotent_split(AlgebraElement<S>{derivative(f)}, f);
}

/// Factorisation attached to an idempotent e of K[X]/(f): g = gcd(f, e).
template <class S>
Factorisation<S> idempotent_to_factorisation(const AlgebraElement<S>& e, const Poly<S>& f) {
  QuotientAlgebra<S> q(f);
  const auto er = q.reduce(e.rep);
  if (q.mul(er, er) != er) throw Error(ErrorCode::NotIdempotent, pretty(e.rep));
  Poly<S> g = gcd(f, er.rep);
  if (g.is_zero()) g = f;
  Poly<S> h = f / g;
  auto out = detail::coprime_factorisation(std::move(g), std::move(h));
  if (!out.bezout) throw Error(ErrorCode::Internal, "idempotent produced non-coprime factors");
  return out;
}

/// e = g u reduced modulo f = g h, where u g + v h = 1.
template <class S>
AlgebraElement<S> factorisation_to_idempotent(const Poly<S>& f, const Factorisation<S>& fac) {
  if (!fac.g.is_monic() || !fac.h.is_monic() || fac.g * fac.h != f) {
    throw Error(ErrorCode::BadFactorisation, "g*h differs from " + pretty(f));
  }
  BezoutCert<S> cert = fac.bezout ? *fac.bezout : gcd_bezout(fac.g, fac.h);
  if (cert.d.degree() != 0 || cert.u * fac.g + cert.v * fac.h != Poly<S>::constant(S(1))) {
    throw Error(ErrorCode::BadFactorisation, "factors are not coprime");
  }
  return {(fac.g * cert.u) % f};
}

/// Gram matrix of the trace form in the basis 1, x, ..., x^{d-1}.
template <class S>
Matrix<S> trace_form(const QuotientAlgebra<S>& q) {
  const auto d = static_cast<Eigen::Index>(q.dim());
  std::vector<S> power_traces(static_cast<std::size_t>(2 * d - 1));
  auto xp = q.one();
  for (auto& t : power_traces) {
    t = q.trace(xp);
    xp = q.mul(xp, q.x());
  }
  Matrix<S> gram(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) gram(i, j) = power_traces[static_cast<std::size_t>(i + j)];
  return gram;
}

template <class S>
struct IntegralityVerdict {
  bool pass = false;
  TraceCertificate<S> certificate;
  std::optional<std::size_t> offending_index;  // first t_j outside V on FAIL
};

/// For h monic separable over V and b in K[X]/(h): PASS iff every
/// t_j = tr(h_j(x) b) lies in V, in which case h'(x) b = sum t_j x^j shows
/// b in V[x][1/h'].
template <ValuedField F>
IntegralityVerdict<typename F::Elem> integral_trace_certificate(const AlgebraElement<typename F::Elem>& b,
                                                                const Poly<typename F::Elem>& h, const F& field) {
  if (!h.is_monic() || h.degree() < 1 || !coeffs_in_V(h, field)) {
    throw Error(ErrorCode::BadModulus, "need a monic polynomial over V: " + pretty(h));
  }
  if (gcd(h, derivative(h)).degree() != 0) throw Error(ErrorCode::NotSeparable, pretty(h));
  QuotientAlgebra<typename F::Elem> q(h);
  IntegralityVerdict<typename F::Elem> out;
  out.certificate = tate_identity_check(q.reduce(b.rep), q);
  for (std::size_t j = 0; j < out.certificate.traces.size(); ++j) {
    if (!in_V(out.certificate.traces[j], field)) {
      out.offending_index = j;
      return out;
    }
  }
  out.pass = true;
  return out;
}

template <class S>
struct CoefficientCheck {
  bool integral = false;
  Factorisation<S> factorisation;
};

/// Separable split of f monic over V, then whether both factors have all
/// coefficients in V (as they must when V is integrally closed).
template <ValuedField F>
CoefficientCheck<typename F::Elem> integral_coefficients_check(const Poly<typename F::Elem>& f, const F& field) {
  if (!f.is_monic() || !coeffs_in_V(f, field)) throw Error(ErrorCode::BadModulus, "need a monic polynomial over V");
  CoefficientCheck<typename F::Elem> out{false, separable_split(f)};
  out.integral = coeffs_in_V(out.factorisation.g, field) && coeffs_in_V(out.factorisation.h, field);
  return out;
}

}  // namespace hk
