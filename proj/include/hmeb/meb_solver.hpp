#pragma once

// Minimum enclosing balls in the polygonal Funk, reverse Funk, Hilbert and
// Thompson geometries.
//
// The objective of a point set G is the pair (radius, center) minimizing the
// radius first and the center lexicographically second; it is monotone and
// local, so Hilbert balls are solved by a randomized LP-type algorithm of
// combinatorial dimension 3 built on two primitives, the violation test and
// the basis computation. A radius bisection over intersections of realized
// balls serves as an independent solver for every metric.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hmeb/balls.hpp"
#include "hmeb/core_geometry.hpp"
#include "hmeb/metrics.hpp"

namespace hmeb {

using Polygon = ConvexPolygon<double>;
using Region = ClipResult<double>;
using Ball = MetricBall<double>;

struct ObjectiveValue {
  double radius = 0;
  Point2d center = Point2d::Zero();
};

/// Exact lexicographic order on (radius, center.x, center.y).
bool operator<(const ObjectiveValue& a, const ObjectiveValue& b);

/// Three-way lexicographic comparison treating radii within radius_tol and
/// coordinates within center_tol as equal.
int compare(const ObjectiveValue& a, const ObjectiveValue& b, double radius_tol,
            double center_tol);

struct Basis {
  std::vector<std::size_t> support;  // indices into MebInstance::points()
  ObjectiveValue value;

  bool contains_index(std::size_t i) const;
};

struct SolverTolerances {
  double dist = kDistEps;
  double radius = kRadiusEps;
};

/// Domain, deduplicated interior points, metric and seed.
class MebInstance {
 public:
  MebInstance(Polygon omega, std::span<const Point2d> points, MetricKind kind,
              std::uint64_t seed = 0, SolverTolerances tol = {});

  const Polygon& omega() const { return omega_; }
  const std::vector<Point2d>& points() const { return points_; }
  const Point2d& point(std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  MetricKind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  const SolverTolerances& tolerances() const { return tol_; }

  /// Position of point i in the list given to the constructor.
  std::size_t source_index(std::size_t i) const { return source_index_[i]; }

  /// d(center, points[i]) in the instance metric.
  double distance_from(const Point2d& center, std::size_t i) const;

 private:
  Polygon omega_;
  std::vector<Point2d> points_;
  std::vector<std::size_t> source_index_;
  MetricKind kind_;
  std::uint64_t seed_;
  SolverTolerances tol_;
};

struct SolverStats {
  std::size_t violation_tests = 0;
  std::size_t basis_computations = 0;
  std::size_t bisection_iterations = 0;
};

enum class SolverKind { LpType, Bisection };

struct MebResult {
  ObjectiveValue value;
  Basis basis;  // empty support on the bisection path
  Ball ball;
  SolverStats stats;
  SolverKind solver = SolverKind::Bisection;
};

/// {c : d(c, x) <= r for every instance point x}, the intersection of the
/// reversed-metric balls around the points.
Region feasible_center_set(const MebInstance& instance, double r);
Region feasible_center_set(const MebInstance& instance,
                           std::span<const std::size_t> subset, double r);

/// Lexicographic minimum of a center region, moved into the open domain when
/// it lies on the boundary.
Point2d extract_center(const Polygon& omega, const Region& region);

MebResult min_ball_bisection(const MebInstance& instance);
ObjectiveValue min_ball_bisection(const MebInstance& instance,
                                  std::span<const std::size_t> subset,
                                  SolverStats* stats = nullptr);

// Hilbert primitives. The instance metric must be Hilbert.
ObjectiveValue two_point_center(const MebInstance& instance, std::size_t p,
                                std::size_t q);
ObjectiveValue three_point_value(const MebInstance& instance, std::size_t a,
                                 std::size_t b, std::size_t c);
/// three_point_value together with its minimal support (two or three points).
Basis three_point_basis(const MebInstance& instance, std::size_t a, std::size_t b,
                        std::size_t c);

/// True when x lies outside the basis ball by more than the distance slack.
bool violation_test(const MebInstance& instance, const Basis& basis, std::size_t x);
/// Basis of basis.support + {x}; x must violate the basis.
Basis basis_computation(const MebInstance& instance, const Basis& basis,
                        std::size_t x);

MebResult lp_type_solve(const MebInstance& instance);

/// The objective of a subset, by exhaustive enumeration of candidate bases
/// of size <= 3 (Hilbert) or by bisection (other metrics).
ObjectiveValue objective_f(const MebInstance& instance,
                           std::span<const std::size_t> subset);

}  // namespace hmeb
