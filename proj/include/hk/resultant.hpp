#pragma once

#include "hk/matrix.hpp"
#include "hk/poly.hpp"

namespace hk {

/// Sylvester matrix of f (degree m) and g (degree n), coefficients in
/// descending order: n shifted rows of f followed by m shifted rows of g.
template <class S>
Matrix<S> sylvester_matrix(const Poly<S>& f, const Poly<S>& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  Matrix<S> s = Matrix<S>::Constant(size, size, S());
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = f[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = g[static_cast<std::size_t>(n - k)];
  return s;
}

/// Res(f, g) as the Sylvester determinant. Res(f, 0) = 0 unless f is a
/// nonzero constant; Res(c, g) = c^deg g.
template <class S>
S resultant(const Poly<S>& f, const Poly<S>& g) {
  if (f.is_zero() || g.is_zero()) {
    if ((f.is_zero() && g.degree() == 0) || (g.is_zero() && f.degree() == 0)) return S(1);
    return S();
  }
  return determinant(sylvester_matrix(f, g));
}

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f).
template <class S>
S discriminant(const Poly<S>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPoly, "discriminant of the zero polynomial");
  const long d = f.degree();
  if (d < 1) return S(1);
  S r = resultant(f, derivative(f)) / f.lead();
  return ((d * (d - 1) / 2) % 2) ? -r : r;
}

}  // namespace hk
