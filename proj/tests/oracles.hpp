#pragma once

// Test-only reference computations. These deliberately avoid the library's
// ray scan, chord frames and realized balls: chords are found by brute-force
// line/segment intersection and distances come straight from the boundary
// point norms.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "hmeb/core_geometry.hpp"
#include "hmeb/meb_solver.hpp"

namespace hmeb::oracle {

struct Chord {
  Point2d p_prime;  // behind p
  Point2d q_prime;  // beyond q
};

// Intersects the line p + t (q - p) with every edge segment and keeps the
// closest hit on each side.
inline Chord chord(const std::vector<Point2d>& poly, const Point2d& p, const Point2d& q) {
  const Point2d d = q - p;
  double t_plus = std::numeric_limits<double>::infinity();
  double t_minus = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2d a = poly[i];
    const Point2d b = poly[(i + 1) % poly.size()];
    const Point2d e = b - a;
    // p + t d = a + s e
    const double den = d.x() * (-e.y()) - d.y() * (-e.x());
    if (std::abs(den) < 1e-300) continue;
    const Point2d rhs = a - p;
    const double t = (rhs.x() * (-e.y()) - rhs.y() * (-e.x())) / den;
    const double s = (d.x() * rhs.y() - d.y() * rhs.x()) / den;
    if (s < -1e-12 || s > 1 + 1e-12) continue;
    if (t > 0) t_plus = std::min(t_plus, t);
    if (t < 0) t_minus = std::max(t_minus, t);
  }
  return {p + t_minus * d, p + t_plus * d};
}

inline double funk(const std::vector<Point2d>& poly, const Point2d& p, const Point2d& q) {
  if ((p - q).norm() == 0) return 0;
  const auto c = chord(poly, p, q);
  return std::log((p - c.q_prime).norm() / (q - c.q_prime).norm());
}

inline double hilbert(const std::vector<Point2d>& poly, const Point2d& p, const Point2d& q) {
  if ((p - q).norm() == 0) return 0;
  const auto c = chord(poly, p, q);
  return 0.5 * std::log(((q - c.p_prime).norm() / (p - c.p_prime).norm()) *
                        ((p - c.q_prime).norm() / (q - c.q_prime).norm()));
}

inline double thompson(const std::vector<Point2d>& poly, const Point2d& p, const Point2d& q) {
  return std::max(funk(poly, p, q), funk(poly, q, p));
}

inline double distance(const std::vector<Point2d>& poly, MetricKind kind, const Point2d& p,
                       const Point2d& q) {
  switch (kind) {
    case MetricKind::Funk: return funk(poly, p, q);
    case MetricKind::ReverseFunk: return funk(poly, q, p);
    case MetricKind::Hilbert: return hilbert(poly, p, q);
    case MetricKind::Thompson: return thompson(poly, p, q);
  }
  return 0;
}

// Minimizes max_i d(c, x_i) over centers c by successive grid refinement.
// Sublevel sets are convex, so shrinking a window around the best grid node
// converges to the optimum radius.
inline std::pair<double, Point2d> min_radius_by_grid(const Polygon& omega,
                                                     const std::vector<Point2d>& pts,
                                                     MetricKind kind) {
  const auto& poly = omega.vertices();
  auto objective = [&](const Point2d& c) {
    if (point_location(omega, c) != Location::Interior)
      return std::numeric_limits<double>::infinity();
    double worst = 0;
    for (const auto& x : pts) worst = std::max(worst, distance(poly, kind, c, x));
    return worst;
  };
  Point2d lo = poly[0], hi = poly[0];
  for (const auto& v : poly) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  Point2d best = omega.centroid();
  double best_val = objective(best);
  Point2d half = (hi - lo) / 2;
  Point2d mid = (hi + lo) / 2;
  constexpr int kGrid = 24;
  for (int level = 0; level < 60; ++level) {
    for (int i = 0; i <= kGrid; ++i)
      for (int j = 0; j <= kGrid; ++j) {
        const Point2d c = mid + Point2d(half.x() * (2.0 * i / kGrid - 1),
                                        half.y() * (2.0 * j / kGrid - 1));
        const double v = objective(c);
        if (v < best_val) {
          best_val = v;
          best = c;
        }
      }
    mid = best;
    half *= 0.6;
  }
  return {best_val, best};
}

}  // namespace hmeb::oracle
