#pragma once

// Polygonal closed balls: Funk balls are homothets of the domain, reverse
// Funk balls are reflected homothets clipped to the domain, Hilbert balls
// are hulls of spoke points, Thompson balls intersect the two Funk balls.

#include <cmath>
#include <optional>
#include <vector>

#include "hmeb/core_geometry.hpp"
#include "hmeb/metrics.hpp"

namespace hmeb {

template <typename Scalar>
struct MetricBall {
  MetricKind kind = MetricKind::Hilbert;
  Point2<Scalar> center = Point2<Scalar>::Zero();
  Scalar radius = 0;
  /// Realized ball clipped to the domain. Empty for a ball that collapses to
  /// its center (r = 0, or a radius below geometric resolution).
  std::optional<ConvexPolygon<Scalar>> shape;

  bool is_point() const { return !shape.has_value(); }

  ClipResult<Scalar> region() const {
    if (shape) return {*shape};
    return {center};
  }

  /// Vertex list for output; the center alone for a point ball.
  std::vector<Point2<Scalar>> outline() const {
    if (shape) return shape->vertices();
    return {center};
  }
};

/// The chord through p and vertex `vertex_index` of the domain.
template <typename Scalar>
struct Spoke {
  std::size_t vertex_index = 0;
  Point2<Scalar> vertex_end;
  Point2<Scalar> opposite_end;
};

template <typename Scalar>
std::vector<Spoke<Scalar>> spokes(const ConvexPolygon<Scalar>& omega,
                                  const Point2<Scalar>& p) {
  require_interior(omega, p);
  std::vector<Spoke<Scalar>> out;
  out.reserve(omega.size());
  for (std::size_t j = 0; j < omega.size(); ++j) {
    const auto back = ray_boundary_intersection<Scalar>(omega, p, p - omega[j]);
    out.push_back({j, omega[j], back.hit});
  }
  return out;
}

namespace detail {

template <typename Scalar>
MetricBall<Scalar> from_region(MetricKind kind, const Point2<Scalar>& p, Scalar r,
                               ClipResult<Scalar> region) {
  MetricBall<Scalar> ball{kind, p, r, std::nullopt};
  if (region.kind() == ClipKind::Polygon) ball.shape = region.polygon();
  return ball;
}

template <typename Scalar>
void check_ball_args(const ConvexPolygon<Scalar>& omega, const Point2<Scalar>& p,
                     Scalar r) {
  require_interior(omega, p);
  if (!std::isfinite(r) || r < 0)
    throw GeometryError(ErrorCode::Degenerate, "radius must be finite and >= 0");
}

}  // namespace detail

/// p + (1 - e^{-r})(omega - p), vertex by vertex.
template <typename Scalar>
MetricBall<Scalar> funk_ball(const ConvexPolygon<Scalar>& omega,
                             const Point2<Scalar>& p, Scalar r) {
  detail::check_ball_args(omega, p, r);
  MetricBall<Scalar> ball{MetricKind::Funk, p, r, std::nullopt};
  if (r == 0) return ball;
  const Scalar ratio = -std::expm1(-r);
  std::vector<Point2<Scalar>> verts;
  verts.reserve(omega.size());
  for (const auto& v : omega.vertices()) verts.push_back(p + ratio * (v - p));
  Scalar shortest = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < verts.size(); ++i)
    shortest = std::min(shortest, (verts[(i + 1) % verts.size()] - verts[i]).norm());
  if (shortest <= omega.tolerance()) return ball;
  ball.shape = ConvexPolygon<Scalar>::from_normalized(std::move(verts));
  return ball;
}

/// omega intersected with the reflected homothet p + (e^r - 1)(p - omega).
/// The reflected homothet is expressed through its half-planes
/// n_i . (x - p) >= -(e^r - 1) h_i, h_i being p's distance to edge i, so
/// arbitrarily large radii stay well conditioned.
template <typename Scalar>
MetricBall<Scalar> reverse_funk_ball(const ConvexPolygon<Scalar>& omega,
                                     const Point2<Scalar>& p, Scalar r) {
  detail::check_ball_args(omega, p, r);
  if (r == 0) return {MetricKind::ReverseFunk, p, r, std::nullopt};
  const Scalar ratio = std::expm1(r);
  const Scalar tol = omega.tolerance();
  auto pts = omega.vertices();
  for (std::size_t i = 0; i < omega.size() && !pts.empty(); ++i) {
    const Point2<Scalar> n = omega.normal(i);
    const Scalar h = omega.inside_distance(i, p);
    pts = detail::clip_halfplane<Scalar>(pts, -n, ratio * h - n.dot(p), tol);
  }
  return detail::from_region<Scalar>(MetricKind::ReverseFunk, p, r,
                                     detail::classify<Scalar>(std::move(pts), tol));
}

/// Convex hull of the points at Hilbert distance r on both sides of p along
/// every spoke.
template <typename Scalar>
MetricBall<Scalar> hilbert_ball(const ConvexPolygon<Scalar>& omega,
                                const Point2<Scalar>& p, Scalar r) {
  detail::check_ball_args(omega, p, r);
  if (r == 0) return {MetricKind::Hilbert, p, r, std::nullopt};
  std::vector<Point2<Scalar>> pts;
  pts.reserve(2 * omega.size());
  for (const auto& spoke : spokes(omega, p)) {
    const Point2<Scalar> toward = spoke.vertex_end - p;
    const Point2<Scalar> away = spoke.opposite_end - p;
    const Scalar to_vertex = toward.norm();
    const Scalar to_opposite = away.norm();
    const Scalar u_toward =
        *offset_at_distance(MetricKind::Hilbert, to_vertex, to_opposite, r);
    const Scalar u_away =
        *offset_at_distance(MetricKind::Hilbert, to_opposite, to_vertex, r);
    pts.push_back(p + (u_toward / to_vertex) * toward);
    pts.push_back(p + (u_away / to_opposite) * away);
  }
  const Scalar tol = omega.tolerance();
  return detail::from_region<Scalar>(MetricKind::Hilbert, p, r,
                                     detail::classify<Scalar>(std::move(pts), tol));
}

template <typename Scalar>
MetricBall<Scalar> thompson_ball(const ConvexPolygon<Scalar>& omega,
                                 const Point2<Scalar>& p, Scalar r) {
  detail::check_ball_args(omega, p, r);
  const auto forward = funk_ball(omega, p, r);
  const auto reverse = reverse_funk_ball(omega, p, r);
  if (forward.is_point() || reverse.is_point())
    return {MetricKind::Thompson, p, r, std::nullopt};
  return detail::from_region<Scalar>(MetricKind::Thompson, p, r,
                                     clip_convex(*forward.shape, *reverse.shape));
}

template <typename Scalar>
MetricBall<Scalar> ball(const ConvexPolygon<Scalar>& omega, MetricKind kind,
                        const Point2<Scalar>& p, Scalar r) {
  switch (kind) {
    case MetricKind::Funk: return funk_ball(omega, p, r);
    case MetricKind::ReverseFunk: return reverse_funk_ball(omega, p, r);
    case MetricKind::Hilbert: return hilbert_ball(omega, p, r);
    case MetricKind::Thompson: return thompson_ball(omega, p, r);
  }
  return {};
}

/// Distance-based membership: d(center, x) <= radius + slack.
template <typename Scalar>
bool contains(const ConvexPolygon<Scalar>& omega, const MetricBall<Scalar>& b,
              const Point2<Scalar>& x, Scalar slack) {
  return distance(omega, b.kind, b.center, x) <= b.radius + slack;
}

}  // namespace hmeb
