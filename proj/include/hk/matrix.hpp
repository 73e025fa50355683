#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/Core>

#include "hk/poly.hpp"
#include "hk/ratfunc.hpp"
#include "hk/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<hk::Rational> : GenericNumTraits<hk::Rational> {
  using Real = hk::Rational;
  using NonInteger = hk::Rational;
  using Literal = hk::Rational;
  using Nested = hk::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100,
  };
};

template <>
struct NumTraits<hk::RatFunc> : GenericNumTraits<hk::RatFunc> {
  using Real = hk::RatFunc;
  using NonInteger = hk::RatFunc;
  using Literal = hk::RatFunc;
  using Nested = hk::RatFunc;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 500,
    MulCost = 1000,
  };
};

}  // namespace Eigen

namespace hk {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Exact determinant by Bareiss fraction-free elimination. Each division is
/// exact, so over Z-valued entries intermediates stay integral.
template <class S>
S determinant(Matrix<S> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::Internal, "determinant of a non-square matrix");
  if (n == 0) return S(1);
  S sign(1);
  S prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return S();
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = S();
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Characteristic polynomial det(T*I - m) via reduction to upper Hessenberg
/// form by elimination similarities, then the standard three-term recurrence
/// on the leading principal minors. O(n^3) field operations.
template <class S>
Poly<S> charpoly(Matrix<S> h) {
  const Eigen::Index n = h.rows();
  if (n != h.cols()) throw Error(ErrorCode::Internal, "charpoly of a non-square matrix");

  for (Eigen::Index m = 1; m + 1 < n; ++m) {
    Eigen::Index i = m;
    while (i < n && is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      h.row(i).swap(h.row(m));
      h.col(i).swap(h.col(m));
    }
    const S pivot_inv = S(1) / h(m, m - 1);
    for (Eigen::Index j = m + 1; j < n; ++j) {
      if (is_zero(h(j, m - 1))) continue;
      const S u = h(j, m - 1) * pivot_inv;
      for (Eigen::Index k = 0; k < n; ++k) h(j, k) -= u * h(m, k);
      for (Eigen::Index k = 0; k < n; ++k) h(k, m) += u * h(k, j);
    }
  }

  // p[k] = charpoly of the leading k x k block.
  std::vector<Poly<S>> p(static_cast<std::size_t>(n) + 1);
  p[0] = Poly<S>::constant(S(1));
  for (Eigen::Index m = 1; m <= n; ++m) {
    const auto mi = static_cast<std::size_t>(m);
    p[mi] = Poly<S>({-h(m - 1, m - 1), S(1)}) * p[mi - 1];
    S prod(1);
    for (Eigen::Index i = m - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (is_zero(prod)) break;
      p[mi] -= (h(i - 1, m - 1) * prod) * p[static_cast<std::size_t>(i) - 1];
    }
  }
  return p[static_cast<std::size_t>(n)];
}

/// Berkowitz's division-free algorithm over a commutative ring. Returns the
/// coefficients of det(T*I - a), highest degree first.
template <class R>
std::vector<R> berkowitz(const std::vector<std::vector<R>>& a, const R& one) {
  const std::size_t n = a.size();
  std::vector<R> v{one};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading block A, column s = a[0..r)[r], row a[r][0..r).
    std::vector<R> col(r + 2);
    col[0] = one;
    col[1] = R() - a[r][r];
    std::vector<R> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      R dot;
      for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * s[i];
      col[k + 2] = R() - dot;
      if (k + 1 == r) break;
      std::vector<R> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += a[i][j] * s[j];
      s = std::move(next);
    }
    std::vector<R> w(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += col[i - j] * v[j];
    v = std::move(w);
  }
  return v;
}

// Over Q(t) the generic routines spend their time canonicalising rational
// functions. These clear denominators once and work in Q[t] instead.
Poly<RatFunc> charpoly(const Matrix<RatFunc>& m);
RatFunc determinant(const Matrix<RatFunc>& m);

}  // namespace hk
