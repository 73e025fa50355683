#pragma once

#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>

#include "hk/error.hpp"
#include "hk/matrix.hpp"
#include "hk/poly.hpp"

namespace hk {

/// Element of K[X]/(f), held as its reduced representative.
template <class S>
struct AlgebraElement {
  Poly<S> rep;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// K[X]/(f) for a monic modulus f of degree d >= 1, with basis
/// 1, x, ..., x^{d-1}.
template <class S>
class QuotientAlgebra {
 public:
  using Element = AlgebraElement<S>;

  explicit QuotientAlgebra(Poly<S> modulus) : f_(std::move(modulus)) {
    if (f_.degree() < 1 || !f_.is_monic()) {
      throw Error(ErrorCode::BadModulus, "quotient algebra needs a monic modulus of degree >= 1");
    }
  }

  const Poly<S>& modulus() const { return f_; }
  std::size_t dim() const { return static_cast<std::size_t>(f_.degree()); }

  Element reduce(const Poly<S>& p) const { return {p % f_}; }
  Element x() const { return reduce(Poly<S>::x()); }
  Element one() const { return {Poly<S>::constant(S(1))}; }

  Element add(const Element& a, const Element& b) const { return {a.rep + b.rep}; }
  Element sub(const Element& a, const Element& b) const { return {a.rep - b.rep}; }
  Element mul(const Element& a, const Element& b) const { return reduce(a.rep * b.rep); }

  /// Column j holds the coordinates of b * x^j.
  Matrix<S> multiplication_matrix(const Element& b) const {
    const auto d = static_cast<Eigen::Index>(dim());
    Matrix<S> m = Matrix<S>::Constant(d, d, S());
    Poly<S> col = b.rep % f_;
    const Poly<S> x = Poly<S>::x();
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index i = 0; i < d; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
      if (j + 1 < d) col = (col * x) % f_;
    }
    return m;
  }

  S trace(const Element& b) const { return multiplication_matrix(b).trace(); }

  /// Characteristic polynomial (in T) of multiplication by b.
  Poly<S> charpoly(const Element& b) const { return hk::charpoly(multiplication_matrix(b)); }

 private:
  Poly<S> f_;
};

template <class S>
struct InverseResult {
  Poly<S> inverse;          // p * inverse == 1 modulo refined_modulus
  Poly<S> refined_modulus;  // monic divisor of the original modulus
  std::size_t rounds = 0;   // number of gcd refinements performed
};

/// Inverts p without factoring the modulus. `vanishes(rep)` decides whether
/// an element vanishes at the distinguished root of the modulus; p must not.
/// Every common factor of p and the modulus is split off; the distinguished
/// root stays a root of what is left, where p becomes invertible.
template <class S>
InverseResult<S> invert_refine(const AlgebraElement<S>& p, const QuotientAlgebra<S>& q,
                               const std::type_identity_t<std::function<bool(const Poly<S>&)>>& vanishes) {
  if (p.rep.is_zero() || vanishes(p.rep)) {
    throw Error(ErrorCode::ZeroDivisorInversion, "element vanishes at the distinguished root");
  }
  InverseResult<S> out;
  Poly<S> e = q.modulus();
  for (;;) {
    Poly<S> d = gcd(p.rep, e);
    if (d.degree() <= 0) break;
    e = e / d;
    ++out.rounds;
  }
  if (e.degree() < 1) throw Error(ErrorCode::Internal, "modulus refined away entirely");
  auto cert = gcd_bezout(p.rep % e, e);
  out.inverse = cert.u % e;
  out.refined_modulus = std::move(e);
  return out;
}

}  // namespace hk
