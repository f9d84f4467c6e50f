#pragma once

// Funk, reverse Funk, Hilbert and Thompson distances on the interior of a
// convex polygon, and the inverse problem along a ray.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>

#include "hmeb/core_geometry.hpp"

namespace hmeb {

enum class MetricKind { Funk, ReverseFunk, Hilbert, Thompson };

constexpr bool is_symmetric(MetricKind kind) {
  return kind == MetricKind::Hilbert || kind == MetricKind::Thompson;
}

/// The metric whose ball around x is {c : d(c, x) <= r}.
constexpr MetricKind reversed(MetricKind kind) {
  switch (kind) {
    case MetricKind::Funk: return MetricKind::ReverseFunk;
    case MetricKind::ReverseFunk: return MetricKind::Funk;
    default: return kind;
  }
}

constexpr std::string_view metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::Funk: return "funk";
    case MetricKind::ReverseFunk: return "reverse_funk";
    case MetricKind::Hilbert: return "hilbert";
    case MetricKind::Thompson: return "thompson";
  }
  return "";
}

inline std::optional<MetricKind> parse_metric(std::string_view name) {
  for (auto k : {MetricKind::Funk, MetricKind::ReverseFunk, MetricKind::Hilbert,
                 MetricKind::Thompson})
    if (metric_name(k) == name) return k;
  return std::nullopt;
}

namespace detail {

template <typename Scalar>
bool coincident(const ConvexPolygon<Scalar>& omega, const Point2<Scalar>& p,
                const Point2<Scalar>& q) {
  return (q - p).norm() <= Scalar(kGeomEps) * omega.diameter();
}

// Funk distance from the backward/forward boundary distances of a chord:
// F(p, q) = ln(D+ / (D+ - u)).
template <typename Scalar>
Scalar funk_from_chord(Scalar forward, Scalar u) {
  return -std::log1p(-u / forward);
}

// F(q, p) = ln((D- + u) / D-).
template <typename Scalar>
Scalar reverse_funk_from_chord(Scalar backward, Scalar u) {
  return std::log1p(u / backward);
}

}  // namespace detail

template <typename Scalar>
Scalar funk_distance(const ConvexPolygon<Scalar>& omega, const Point2<Scalar>& p,
                     const Point2<Scalar>& q) {
  require_interior(omega, p);
  require_interior(omega, q);
  if (detail::coincident(omega, p, q)) return 0;
  const Scalar u = (q - p).norm();
  const auto exit = ray_boundary_intersection<Scalar>(omega, p, q - p);
  return detail::funk_from_chord(exit.distance, u);
}

template <typename Scalar>
Scalar reverse_funk_distance(const ConvexPolygon<Scalar>& omega,
                             const Point2<Scalar>& p, const Point2<Scalar>& q) {
  return funk_distance(omega, q, p);
}

template <typename Scalar>
Scalar hilbert_distance(const ConvexPolygon<Scalar>& omega,
                        const Point2<Scalar>& p, const Point2<Scalar>& q) {
  require_interior(omega, p);
  require_interior(omega, q);
  if (detail::coincident(omega, p, q)) return 0;
  const auto chord = chord_frame(omega, p, q);
  // Half the log of the cross ratio (dQP/dPP)(dPQ/dQQ).
  return (detail::reverse_funk_from_chord(chord.backward, chord.separation) +
          detail::funk_from_chord(chord.forward, chord.separation)) /
         2;
}

template <typename Scalar>
Scalar thompson_distance(const ConvexPolygon<Scalar>& omega,
                         const Point2<Scalar>& p, const Point2<Scalar>& q) {
  require_interior(omega, p);
  require_interior(omega, q);
  if (detail::coincident(omega, p, q)) return 0;
  const auto chord = chord_frame(omega, p, q);
  return std::max(detail::funk_from_chord(chord.forward, chord.separation),
                  detail::reverse_funk_from_chord(chord.backward, chord.separation));
}

template <typename Scalar>
Scalar distance(const ConvexPolygon<Scalar>& omega, MetricKind kind,
                const Point2<Scalar>& p, const Point2<Scalar>& q) {
  switch (kind) {
    case MetricKind::Funk: return funk_distance(omega, p, q);
    case MetricKind::ReverseFunk: return reverse_funk_distance(omega, p, q);
    case MetricKind::Hilbert: return hilbert_distance(omega, p, q);
    case MetricKind::Thompson: return thompson_distance(omega, p, q);
  }
  return 0;
}

/// Euclidean offset u along a chord with forward boundary distance D+ and
/// backward boundary distance D- at which the metric reaches r. Returns
/// nullopt when the reverse-Funk sphere leaves the domain.
template <typename Scalar>
std::optional<Scalar> offset_at_distance(MetricKind kind, Scalar forward,
                                         Scalar backward, Scalar r) {
  if (r <= 0) return Scalar(0);
  const Scalar funk = -forward * std::expm1(-r);
  const Scalar reverse = backward * std::expm1(r);
  switch (kind) {
    case MetricKind::Funk: return funk;
    case MetricKind::ReverseFunk:
      if (!(reverse < forward)) return std::nullopt;
      return reverse;
    case MetricKind::Hilbert: {
      // u = (k-1) D- D+ / (D+ + k D-), k = e^{2r}, divided through by k.
      const Scalar inv_k = std::exp(-2 * r);
      return forward * backward * -std::expm1(-2 * r) / (forward * inv_k + backward);
    }
    case MetricKind::Thompson: return std::min(funk, reverse);
  }
  return std::nullopt;
}

/// The point q on the ray from p along dir with distance(kind, p, q) = r.
template <typename Scalar>
Point2<Scalar> point_at_distance(const ConvexPolygon<Scalar>& omega,
                                 MetricKind kind, const Point2<Scalar>& p,
                                 const Point2<Scalar>& dir, Scalar r) {
  require_interior(omega, p);
  if (!std::isfinite(r) || r < 0)
    throw GeometryError(ErrorCode::Degenerate, "radius must be finite and >= 0");
  if (r == 0) return p;
  const Point2<Scalar> unit = dir.normalized();
  const auto fwd = ray_boundary_intersection<Scalar>(omega, p, unit);
  const auto bwd = ray_boundary_intersection<Scalar>(omega, p, -unit);
  const auto u = offset_at_distance(kind, fwd.distance, bwd.distance, r);
  if (!u)
    throw GeometryError(ErrorCode::Unreachable,
                        "no interior point at that distance along the ray");
  return p + *u * unit;
}

}  // namespace hmeb
