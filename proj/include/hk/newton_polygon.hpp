#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hk/error.hpp"
#include "hk/hensel.hpp"
#include "hk/poly.hpp"
#include "hk/val.hpp"
#include "hk/valued_field.hpp"

namespace hk {

struct PolygonSegment {
  mpq_class slope;      // as drawn; the roots on it have valuation -slope
  std::int64_t length;  // horizontal length = number of roots
  friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

/// Lower convex hull of {(i, v(c_i)) : c_i != 0}.
///
/// Slopes strictly increase from left to right and
/// ord0 + sum(length) == degree, where ord0 is the multiplicity of the root 0.
struct NewtonPolygon {
  std::int64_t degree = 0;
  std::int64_t ord0 = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> vertices;
  std::vector<PolygonSegment> segments;
};

/// Root valuation -> multiplicity.
using RootValMultiset = std::map<RootVal, std::int64_t>;

template <ValuedField F>
NewtonPolygon build_polygon(const Poly<typename F::Elem>& q, const F& field) {
  if (q.is_zero()) throw Error(ErrorCode::ZeroPoly, "Newton polygon of the zero polynomial");
  NewtonPolygon out;
  out.degree = q.degree();
  auto& hull = out.vertices;
  bool first = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Val v = field.valuation(q[i]);
    if (v.is_inf()) continue;
    const std::pair<std::int64_t, std::int64_t> p{static_cast<std::int64_t>(i), v.value()};
    if (first) {
      out.ord0 = p.first;
      first = false;
    }
    // Drop the last vertex while it lies on or above the chord to p.
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const mpz_class cross = mpz_class(b.first - a.first) * (p.second - a.second) -
                              mpz_class(b.second - a.second) * (p.first - a.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const auto dx = hull[k].first - hull[k - 1].first;
    mpq_class slope(mpz_class(hull[k].second - hull[k - 1].second), mpz_class(dx));
    slope.canonicalize();
    out.segments.push_back({slope, dx});
  }
  return out;
}

inline RootValMultiset root_valuations(const NewtonPolygon& p) {
  RootValMultiset m;
  if (p.ord0 > 0) m[RootVal::inf()] += p.ord0;
  for (const auto& s : p.segments) m[RootVal(mpq_class(-s.slope))] += s.length;
  return m;
}

struct IsolatedSlope {
  mpq_class slope;
  std::size_t position;  // index into NewtonPolygon::segments
};

/// Segments of horizontal length 1, each carrying exactly one root.
inline std::vector<IsolatedSlope> isolated_slopes(const NewtonPolygon& p) {
  std::vector<IsolatedSlope> out;
  for (std::size_t k = 0; k < p.segments.size(); ++k) {
    if (p.segments[k].length == 1) out.push_back({p.segments[k].slope, k});
  }
  return out;
}

/// Realises the root on the leftmost segment through the special-polynomial
/// transform, when that segment joins (0, v(a0)) to (1, 0). The root has
/// valuation v(a0) and equals gamma in the step ring over g1.
template <ValuedField F>
SpecialData<typename F::Elem> isolate_leftmost_root(const Poly<typename F::Elem>& f, const F& field) {
  const bool shape_ok = f.degree() >= 1 && coeffs_in_V(f, field) && field.valuation(f[0]) >= Val(1) &&
                        field.valuation(f[1]) == Val(0);
  if (!shape_ok) throw Error(ErrorCode::NotLeftmostIsolated, pretty(f));
  if (!is_zero(f[0])) {
    const auto poly = build_polygon(f, field);
    if (poly.segments.empty() || poly.segments.front().length != 1 || poly.vertices[1].first != 1) {
      throw Error(ErrorCode::NotLeftmostIsolated, pretty(f));
    }
  }
  return make_special(f, field);
}

}  // namespace hk
