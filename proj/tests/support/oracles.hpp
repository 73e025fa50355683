#pragma once

// Independent reference computations. None of these go through the code
// paths they are used to check.

#include <map>
#include <utility>
#include <vector>

#include "hk/poly.hpp"
#include "hk/resultant.hpp"

namespace hk::testing {

/// Sparse bivariate polynomial: (deg_X, deg_Y) -> coefficient.
template <class S>
using Bivariate = std::map<std::pair<int, int>, S>;

template <class S>
void bivariate_add(Bivariate<S>& acc, int i, int j, const S& c) {
  auto& slot = acc[{i, j}];
  slot += c;
  if (is_zero(slot)) acc.erase({i, j});
}

/// Fully expanded f(X) - f(Y) - (X - Y) * sum_j g_j(Y) X^j.
template <class S>
Bivariate<S> difference_quotient_residual(const Poly<S>& f, const std::vector<Poly<S>>& g) {
  Bivariate<S> acc;
  for (int k = 0; k <= f.degree(); ++k) {
    bivariate_add(acc, k, 0, f[static_cast<std::size_t>(k)]);
    bivariate_add(acc, 0, k, S() - f[static_cast<std::size_t>(k)]);
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (int m = 0; m <= g[j].degree(); ++m) {
      const S c = g[j][static_cast<std::size_t>(m)];
      bivariate_add(acc, static_cast<int>(j) + 1, m, S() - c);  // -X * c Y^m X^j
      bivariate_add(acc, static_cast<int>(j), m + 1, c);        // +Y * c Y^m X^j
    }
  }
  return acc;
}

/// Res_X(f(X), T - p(X)) as a polynomial in T, by evaluating the Sylvester
/// resultant at T = 0..d and Lagrange interpolation. For monic f this is the
/// characteristic polynomial of p(x) in K[X]/(f).
template <class S>
Poly<S> charpoly_by_resultant(const Poly<S>& f, const Poly<S>& p) {
  const int d = f.degree();
  const Poly<S> pr = p % f;
  std::vector<S> xs, ys;
  for (int k = 0; k <= d; ++k) {
    const S t(static_cast<long>(k));
    xs.push_back(t);
    ys.push_back(resultant(f, Poly<S>::constant(t) - pr));
  }
  Poly<S> out;
  for (int i = 0; i <= d; ++i) {
    Poly<S> basis = Poly<S>::constant(S(1));
    S denom(1);
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      basis *= Poly<S>({S() - xs[static_cast<std::size_t>(j)], S(1)});
      denom *= xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
    }
    out += basis * (ys[static_cast<std::size_t>(i)] / denom);
  }
  return out;
}

/// Determinant by cofactor expansion along the first row.
template <class S>
S cofactor_determinant(const std::vector<std::vector<S>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return S(1);
  if (n == 1) return m[0][0];
  S acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m[0][c])) continue;
    std::vector<std::vector<S>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<S> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    S term = m[0][c] * cofactor_determinant(minor);
    acc = (c % 2) ? acc - term : acc + term;
  }
  return acc;
}

}  // namespace hk::testing
