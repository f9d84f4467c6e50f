#pragma once

// Tolerance-aware planar primitives: orientation, convex polygon
// normalization, ray exits, convex clipping, hulls and lexicographic extrema.
//
// All types are templated on the scalar; the library itself is exercised
// with double. Every predicate compares against kGeomEps scaled by the
// magnitude of its inputs.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <variant>
#include <vector>

#include "hmeb/errors.hpp"
#include "hmeb/tolerance.hpp"

namespace hmeb {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;
using Point2d = Point2<double>;

template <typename Scalar>
inline Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Lexicographic order: x first, then y.
template <typename Scalar>
inline bool lex_less(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

template <typename Scalar>
inline bool is_finite(const Point2<Scalar>& p) {
  return std::isfinite(p.x()) && std::isfinite(p.y());
}

template <typename Scalar>
inline Scalar max_abs_coordinate(std::span<const Point2<Scalar>> pts) {
  Scalar s = 0;
  for (const auto& p : pts) s = std::max({s, std::abs(p.x()), std::abs(p.y())});
  return s;
}

/// Sign of the signed twice-area of abc. Zero when the area is within
/// kGeomEps * scale^2, scale being the largest coordinate magnitude.
template <typename Scalar>
int orientation(const Point2<Scalar>& a, const Point2<Scalar>& b,
                const Point2<Scalar>& c) {
  const Point2<Scalar> pts[] = {a, b, c};
  const Scalar scale = max_abs_coordinate<Scalar>(pts);
  const Scalar area = cross<Scalar>(b - a, c - a);
  if (std::abs(area) <= Scalar(kGeomEps) * scale * scale) return 0;
  return area > 0 ? 1 : -1;
}

namespace detail {

// Distance-aware turn test: +1 when c lies more than tol to the left of the
// directed line ab, -1 when more than tol to the right, 0 otherwise.
template <typename Scalar>
int turn(const Point2<Scalar>& a, const Point2<Scalar>& b,
         const Point2<Scalar>& c, Scalar tol) {
  const Point2<Scalar> ab = b - a;
  const Scalar len = ab.norm();
  if (len <= tol) return 0;
  const Scalar height = cross<Scalar>(ab, c - a) / len;
  if (height > tol) return 1;
  if (height < -tol) return -1;
  return 0;
}

}  // namespace detail

template <typename Scalar>
struct Segment2 {
  Point2<Scalar> a;
  Point2<Scalar> b;

  /// Canonical endpoint order, a <= b lexicographically.
  static Segment2 make(const Point2<Scalar>& p, const Point2<Scalar>& q) {
    return lex_less<Scalar>(q, p) ? Segment2{q, p} : Segment2{p, q};
  }

  Scalar length() const { return (b - a).norm(); }
};

enum class Location { Interior, Boundary, Exterior };

/// A strictly convex, counterclockwise polygon whose first vertex is the
/// lexicographic minimum. Construction normalizes the raw vertex list.
template <typename Scalar>
class ConvexPolygon {
 public:
  using Point = Point2<Scalar>;

  explicit ConvexPolygon(std::vector<Point> raw);

  /// Wraps vertices that are already known to be normalized (hull output).
  static ConvexPolygon from_normalized(std::vector<Point> vertices) {
    return ConvexPolygon(Trusted{}, std::move(vertices));
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % size()]; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  /// Outward unit normal of edge i (from vertex i to vertex i+1).
  const Point& normal(std::size_t i) const { return normals_[i]; }
  /// Signed distance of p from the supporting line of edge i, positive inside.
  Scalar inside_distance(std::size_t i, const Point& p) const {
    return offsets_[i] - normals_[i].dot(p);
  }

  Scalar scale() const { return scale_; }
  Scalar diameter() const { return diameter_; }
  Scalar tolerance() const { return Scalar(kGeomEps) * scale_; }

  Scalar area() const {
    Scalar a = 0;
    for (std::size_t i = 0; i < size(); ++i)
      a += cross<Scalar>(vertices_[i], vertex(i + 1));
    return a / 2;
  }

  Point centroid() const {
    Point c = Point::Zero();
    for (const auto& v : vertices_) c += v;
    return c / Scalar(size());
  }

 private:
  struct Trusted {};
  ConvexPolygon(Trusted, std::vector<Point> vertices)
      : vertices_(std::move(vertices)) {
    cache();
  }

  void cache() {
    const std::size_t m = vertices_.size();
    normals_.resize(m);
    offsets_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Point e = vertex(i + 1) - vertices_[i];
      normals_[i] = Point(e.y(), -e.x()).normalized();
      offsets_[i] = normals_[i].dot(vertices_[i]);
    }
    scale_ = max_abs_coordinate<Scalar>(vertices_);
    diameter_ = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        diameter_ = std::max(diameter_, (vertices_[i] - vertices_[j]).norm());
  }

  std::vector<Point> vertices_;
  std::vector<Point> normals_;
  std::vector<Scalar> offsets_;
  Scalar scale_ = 0;
  Scalar diameter_ = 0;
};

/// Reorders to counterclockwise from the lexicographic minimum and merges
/// duplicate and collinear vertices. Throws NotConvex or Degenerate.
template <typename Scalar>
ConvexPolygon<Scalar> normalize_polygon(std::vector<Point2<Scalar>> raw) {
  using Point = Point2<Scalar>;
  for (const auto& p : raw)
    if (!is_finite(p))
      throw GeometryError(ErrorCode::Degenerate, "non-finite polygon vertex");

  const Scalar tol = Scalar(kGeomEps) * max_abs_coordinate<Scalar>(raw);

  std::vector<Point> pts;
  pts.reserve(raw.size());
  for (const auto& p : raw)
    if (pts.empty() || (p - pts.back()).norm() > tol) pts.push_back(p);
  while (pts.size() > 1 && (pts.front() - pts.back()).norm() <= tol)
    pts.pop_back();
  if (pts.size() < 3)
    throw GeometryError(ErrorCode::Degenerate,
                        "fewer than 3 distinct polygon vertices");

  Scalar twice_area = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    twice_area += cross<Scalar>(pts[i], pts[(i + 1) % pts.size()]);
  if (twice_area < 0) std::reverse(pts.begin(), pts.end());

  const auto far = std::max_element(pts.begin(), pts.end(),
                                    [&](const Point& a, const Point& b) {
                                      return (a - pts[0]).norm() < (b - pts[0]).norm();
                                    });
  if (std::all_of(pts.begin(), pts.end(), [&](const Point& p) {
        return detail::turn<Scalar>(pts[0], *far, p, tol) == 0;
      }))
    throw GeometryError(ErrorCode::Degenerate, "polygon vertices are collinear");

  // Merge collinear vertices until stable; a fold-back is not convex.
  for (bool changed = true; changed && pts.size() >= 3;) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
      const std::size_t n = pts.size();
      const Point& prev = pts[(i + n - 1) % n];
      const Point& next = pts[(i + 1) % n];
      if (detail::turn<Scalar>(prev, pts[i], next, tol) != 0) continue;
      if ((pts[i] - prev).dot(next - pts[i]) < 0)
        throw GeometryError(ErrorCode::NotConvex, "polygon folds back on itself");
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  if (pts.size() < 3)
    throw GeometryError(ErrorCode::Degenerate, "polygon vertices are collinear");

  const std::size_t n = pts.size();
  Scalar turning = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = pts[(i + n - 1) % n];
    const Point& next = pts[(i + 1) % n];
    if (detail::turn<Scalar>(prev, pts[i], next, tol) < 0)
      throw GeometryError(ErrorCode::NotConvex, "polygon has a reflex vertex");
    const Point e0 = pts[i] - prev;
    const Point e1 = next - pts[i];
    turning += std::atan2(cross<Scalar>(e0, e1), e0.dot(e1));
  }
  // A self-overlapping star turns more than once.
  if (turning > 2 * std::numbers::pi_v<Scalar> + Scalar(1e-6))
    throw GeometryError(ErrorCode::NotConvex, "polygon winds more than once");

  auto first = std::min_element(pts.begin(), pts.end(),
                                [](const Point& a, const Point& b) {
                                  return lex_less<Scalar>(a, b);
                                });
  std::rotate(pts.begin(), first, pts.end());
  return ConvexPolygon<Scalar>::from_normalized(std::move(pts));
}

template <typename Scalar>
ConvexPolygon<Scalar>::ConvexPolygon(std::vector<Point> raw)
    : ConvexPolygon(normalize_polygon<Scalar>(std::move(raw))) {}

template <typename Scalar>
Location point_location(const ConvexPolygon<Scalar>& omega,
                        const Point2<Scalar>& p) {
  Scalar min_dist = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < omega.size(); ++i)
    min_dist = std::min(min_dist, omega.inside_distance(i, p));
  const Scalar tol = omega.tolerance();
  if (min_dist > tol) return Location::Interior;
  if (min_dist < -tol) return Location::Exterior;
  return Location::Boundary;
}

/// True when p is inside omega or within slack of it.
template <typename Scalar>
bool polygon_contains(const ConvexPolygon<Scalar>& omega, const Point2<Scalar>& p,
                      Scalar slack) {
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (omega.inside_distance(i, p) < -slack) return false;
  return true;
}

template <typename Scalar>
inline bool is_interior(const ConvexPolygon<Scalar>& omega,
                        const Point2<Scalar>& p) {
  return is_finite(p) && point_location(omega, p) == Location::Interior;
}

template <typename Scalar>
inline void require_interior(const ConvexPolygon<Scalar>& omega,
                             const Point2<Scalar>& p) {
  if (!is_interior(omega, p))
    throw GeometryError(ErrorCode::NotInterior, "point not interior");
}

template <typename Scalar>
struct RayHit {
  Point2<Scalar> hit;
  std::size_t edge_index = 0;
  Scalar distance = 0;
};

/// Exit point of the ray from an interior p along dir, by linear edge scan.
/// A hit at a vertex is attributed to the edge starting at that vertex.
template <typename Scalar>
RayHit<Scalar> ray_boundary_intersection(const ConvexPolygon<Scalar>& omega,
                                         const Point2<Scalar>& p,
                                         const Point2<Scalar>& dir) {
  require_interior(omega, p);
  const Scalar dir_norm = dir.norm();
  if (!(dir_norm > 0) || !std::isfinite(dir_norm))
    throw GeometryError(ErrorCode::Degenerate, "ray direction is zero");
  const Point2<Scalar> unit = dir / dir_norm;

  Scalar best = std::numeric_limits<Scalar>::infinity();
  std::size_t best_edge = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const Scalar approach = omega.normal(i).dot(unit);
    if (approach <= 0) continue;
    const Scalar t = omega.inside_distance(i, p) / approach;
    if (t < best) {
      best = t;
      best_edge = i;
    }
  }
  RayHit<Scalar> out{p + best * unit, best_edge, best};
  const Scalar tol = omega.tolerance();
  for (std::size_t j = 0; j < omega.size(); ++j) {
    if ((out.hit - omega[j]).norm() <= tol) {
      out.edge_index = j;
      break;
    }
  }
  return out;
}

/// The chord through two distinct interior points p and q, with boundary
/// endpoints in the order <p', p, q, q'>.
template <typename Scalar>
struct ChordFrame {
  Point2<Scalar> p_prime;
  Point2<Scalar> q_prime;
  Scalar backward = 0;    // |p - p'|
  Scalar forward = 0;     // |p - q'|
  Scalar separation = 0;  // |p - q|

  Scalar dQP() const { return backward + separation; }
  Scalar dPP() const { return backward; }
  Scalar dPQ() const { return forward; }
  Scalar dQQ() const { return forward - separation; }
};

template <typename Scalar>
ChordFrame<Scalar> chord_frame(const ConvexPolygon<Scalar>& omega,
                               const Point2<Scalar>& p,
                               const Point2<Scalar>& q) {
  require_interior(omega, p);
  require_interior(omega, q);
  const Scalar u = (q - p).norm();
  if (u <= Scalar(kGeomEps) * omega.diameter())
    throw GeometryError(ErrorCode::CoincidentPoints, "chord endpoints coincide");
  const Point2<Scalar> dir = (q - p) / u;
  const auto fwd = ray_boundary_intersection(omega, p, dir);
  const auto bwd = ray_boundary_intersection<Scalar>(omega, p, -dir);
  return {bwd.hit, fwd.hit, bwd.distance, fwd.distance, u};
}

enum class ClipKind { Empty = 0, Point = 1, Segment = 2, Polygon = 3 };

/// A convex region classified by dimension.
template <typename Scalar>
struct ClipResult {
  std::variant<std::monostate, Point2<Scalar>, Segment2<Scalar>,
               ConvexPolygon<Scalar>>
      region;

  ClipKind kind() const { return static_cast<ClipKind>(region.index()); }
  bool empty() const { return kind() == ClipKind::Empty; }

  const Point2<Scalar>& point() const { return std::get<1>(region); }
  const Segment2<Scalar>& segment() const { return std::get<2>(region); }
  const ConvexPolygon<Scalar>& polygon() const { return std::get<3>(region); }

  /// Vertices of the region (1 for a point, 2 for a segment).
  std::vector<Point2<Scalar>> points() const {
    switch (kind()) {
      case ClipKind::Point: return {point()};
      case ClipKind::Segment: return {segment().a, segment().b};
      case ClipKind::Polygon: return polygon().vertices();
      case ClipKind::Empty: break;
    }
    return {};
  }
};

namespace detail {

// Andrew's monotone chain with a distance tolerance. Returns the hull
// counterclockwise from the lexicographic minimum; fewer than three points
// when the input is degenerate.
template <typename Scalar>
std::vector<Point2<Scalar>> hull_chain(std::vector<Point2<Scalar>> pts,
                                       Scalar tol) {
  using Point = Point2<Scalar>;
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return lex_less<Scalar>(a, b); });
  if (pts.size() <= 1) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn<Scalar>(hull[k - 2], hull[k - 1], pts[i], tol) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn<Scalar>(hull[k - 2], hull[k - 1], pts[i], tol) <= 0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  // Drop coincident neighbours left over from near-duplicate inputs.
  std::vector<Point> out;
  for (const auto& p : hull)
    if (out.empty() || (p - out.back()).norm() > tol) out.push_back(p);
  while (out.size() > 1 && (out.front() - out.back()).norm() <= tol) out.pop_back();
  if (out.size() == 2 && (out[0] - out[1]).norm() <= tol) out.pop_back();
  return out;
}

template <typename Scalar>
ClipResult<Scalar> classify(std::vector<Point2<Scalar>> pts, Scalar tol) {
  if (pts.empty()) return {};
  auto hull = hull_chain<Scalar>(std::move(pts), tol);
  if (hull.size() >= 3)
    return {ConvexPolygon<Scalar>::from_normalized(std::move(hull))};
  if (hull.size() == 2) return {Segment2<Scalar>::make(hull[0], hull[1])};
  return {hull.front()};
}

// Sutherland-Hodgman step against {x : inside_distance(x) >= -tol}, where
// inside_distance(x) = offset - normal . x.
template <typename Scalar>
std::vector<Point2<Scalar>> clip_halfplane(const std::vector<Point2<Scalar>>& poly,
                                           const Point2<Scalar>& normal,
                                           Scalar offset, Scalar tol) {
  std::vector<Point2<Scalar>> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    const Scalar fa = offset - normal.dot(a);
    const Scalar fb = offset - normal.dot(b);
    const bool a_in = fa >= -tol;
    const bool b_in = fb >= -tol;
    if (a_in != b_in && ((fa < 0) != (fb < 0))) {
      const Scalar t = fa / (fa - fb);
      out.push_back(a + t * (b - a));
    }
    if (b_in) out.push_back(b);
  }
  return out;
}

}  // namespace detail

/// Intersection of an arbitrary classified convex region with a polygon.
template <typename Scalar>
ClipResult<Scalar> clip_region(const ClipResult<Scalar>& region,
                               const ConvexPolygon<Scalar>& b) {
  if (region.empty()) return {};
  auto pts = region.points();
  const Scalar tol =
      Scalar(kGeomEps) * std::max(b.scale(), max_abs_coordinate<Scalar>(pts));
  for (std::size_t i = 0; i < b.size() && !pts.empty(); ++i)
    pts = detail::clip_halfplane<Scalar>(pts, b.normal(i),
                                         b.normal(i).dot(b[i]), tol);
  return detail::classify<Scalar>(std::move(pts), tol);
}

/// a intersected with b by iterated half-plane clipping of a against b's
/// edges, then classified by dimension.
template <typename Scalar>
ClipResult<Scalar> clip_convex(const ConvexPolygon<Scalar>& a,
                               const ConvexPolygon<Scalar>& b) {
  return clip_region<Scalar>(ClipResult<Scalar>{a}, b);
}

template <typename Scalar>
ConvexPolygon<Scalar> convex_hull(std::vector<Point2<Scalar>> points) {
  for (const auto& p : points)
    if (!is_finite(p))
      throw GeometryError(ErrorCode::Degenerate, "non-finite hull input");
  const Scalar tol = Scalar(kGeomEps) * max_abs_coordinate<Scalar>(points);
  auto hull = detail::hull_chain<Scalar>(std::move(points), tol);
  if (hull.size() < 3)
    throw GeometryError(ErrorCode::Degenerate, "hull input is collinear");
  return ConvexPolygon<Scalar>::from_normalized(std::move(hull));
}

template <typename Scalar>
Point2<Scalar> lexicographic_min(const ClipResult<Scalar>& region) {
  if (region.empty())
    throw GeometryError(ErrorCode::EmptyRegion, "region is empty");
  const auto pts = region.points();
  return *std::min_element(pts.begin(), pts.end(),
                           [](const auto& a, const auto& b) {
                             return lex_less<Scalar>(a, b);
                           });
}

}  // namespace hmeb
