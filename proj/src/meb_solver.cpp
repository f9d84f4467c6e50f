#include "hmeb/meb_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace hmeb {

bool operator<(const ObjectiveValue& a, const ObjectiveValue& b) {
  if (a.radius != b.radius) return a.radius < b.radius;
  return lex_less<double>(a.center, b.center);
}

int compare(const ObjectiveValue& a, const ObjectiveValue& b, double radius_tol,
            double center_tol) {
  auto cmp = [](double x, double y, double tol) {
    if (x < y - tol) return -1;
    if (x > y + tol) return 1;
    return 0;
  };
  if (int c = cmp(a.radius, b.radius, radius_tol)) return c;
  if (int c = cmp(a.center.x(), b.center.x(), center_tol)) return c;
  return cmp(a.center.y(), b.center.y(), center_tol);
}

bool Basis::contains_index(std::size_t i) const {
  return std::find(support.begin(), support.end(), i) != support.end();
}

MebInstance::MebInstance(Polygon omega, std::span<const Point2d> points,
                         MetricKind kind, std::uint64_t seed, SolverTolerances tol)
    : omega_(std::move(omega)), kind_(kind), seed_(seed), tol_(tol) {
  const double merge = kGeomEps * omega_.diameter();
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_interior(omega_, points[i]);
    const bool duplicate = std::any_of(points_.begin(), points_.end(), [&](const Point2d& q) {
      return (q - points[i]).norm() <= merge;
    });
    if (duplicate) continue;
    points_.push_back(points[i]);
    source_index_.push_back(i);
  }
  if (points_.empty())
    throw GeometryError(ErrorCode::EmptyInstance, "instance has no points");
}

double MebInstance::distance_from(const Point2d& center, std::size_t i) const {
  return distance(omega_, kind_, center, points_[i]);
}

namespace {

bool region_contains(const Region& region, const Point2d& x, double tol) {
  switch (region.kind()) {
    case ClipKind::Empty: return false;
    case ClipKind::Point: return (region.point() - x).norm() <= tol;
    case ClipKind::Segment: {
      const auto& s = region.segment();
      const Point2d ab = s.b - s.a;
      const double len2 = ab.squaredNorm();
      const double t = len2 > 0 ? std::clamp((x - s.a).dot(ab) / len2, 0.0, 1.0) : 0.0;
      return (s.a + t * ab - x).norm() <= tol;
    }
    case ClipKind::Polygon: return polygon_contains(region.polygon(), x, tol);
  }
  return false;
}

Region intersect(const Region& region, const Ball& b, double tol) {
  if (b.is_point()) return region_contains(region, b.center, tol) ? Region{b.center} : Region{};
  return clip_region(region, *b.shape);
}

void require_hilbert(const MebInstance& instance) {
  if (instance.kind() != MetricKind::Hilbert)
    throw std::invalid_argument("LP-type primitives require the Hilbert metric");
}

bool encloses(const MebInstance& instance, const ObjectiveValue& v,
              std::span<const std::size_t> subset) {
  const double limit = v.radius + instance.tolerances().dist;
  return std::all_of(subset.begin(), subset.end(), [&](std::size_t i) {
    return instance.distance_from(v.center, i) <= limit;
  });
}

// Clipping error near the boundary is amplified by the logarithm, so the
// extracted center can miss a point by more than the distance slack; the
// radius then grows to the realized distance.
ObjectiveValue settle(const MebInstance& instance, std::span<const std::size_t> subset,
                      ObjectiveValue v) {
  double reach = 0;
  for (std::size_t i : subset) reach = std::max(reach, instance.distance_from(v.center, i));
  if (reach > v.radius + instance.tolerances().dist) v.radius = reach;
  return v;
}

// Pair values are recomputed often inside one basis computation.
class PairCache {
 public:
  explicit PairCache(const MebInstance& instance) : instance_(instance) {}

  const ObjectiveValue& get(std::size_t p, std::size_t q) {
    if (q < p) std::swap(p, q);
    for (const auto& e : entries_)
      if (e.p == p && e.q == q) return e.value;
    entries_.push_back({p, q, two_point_center(instance_, p, q)});
    return entries_.back().value;
  }

 private:
  struct Entry {
    std::size_t p, q;
    ObjectiveValue value;
  };
  const MebInstance& instance_;
  std::vector<Entry> entries_;
};

Basis three_point_basis_cached(const MebInstance& instance, PairCache& pairs,
                               std::size_t a, std::size_t b, std::size_t c) {
  const std::array<std::array<std::size_t, 3>, 3> splits{
      {{a, b, c}, {a, c, b}, {b, c, a}}};
  std::optional<Basis> best;
  for (const auto& [p, q, third] : splits) {
    const auto& v = pairs.get(p, q);
    if (instance.distance_from(v.center, third) > v.radius + instance.tolerances().dist)
      continue;
    if (!best || v < best->value) best = Basis{{p, q}, v};
  }
  if (best) return *best;
  const std::size_t triple[] = {a, b, c};
  return Basis{{a, b, c}, min_ball_bisection(instance, triple)};
}

}  // namespace

Region feasible_center_set(const MebInstance& instance,
                           std::span<const std::size_t> subset, double r) {
  const MetricKind around = reversed(instance.kind());
  const double tol = instance.omega().tolerance();
  std::optional<Region> region;
  for (std::size_t i : subset) {
    const Ball b = ball(instance.omega(), around, instance.point(i), r);
    region = region ? intersect(*region, b, tol) : b.region();
    if (region->empty()) break;
  }
  return region ? *region : Region{instance.omega()};
}

Region feasible_center_set(const MebInstance& instance, double r) {
  std::vector<std::size_t> all(instance.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return feasible_center_set(instance, all, r);
}

Point2d extract_center(const Polygon& omega, const Region& region) {
  const Point2d c = lexicographic_min(region);
  if (is_interior(omega, c)) return c;
  // Funk center sets can reach the boundary; step toward the region's
  // interior, or the domain's when the region hugs the boundary.
  const auto pts = region.points();
  Point2d target = Point2d::Zero();
  for (const auto& p : pts) target += p;
  target /= double(pts.size());
  if (!is_interior(omega, target)) target = omega.centroid();
  for (double t = 4 * kGeomEps; t <= 1; t *= 2) {
    const Point2d moved = c + t * (target - c);
    if (is_interior(omega, moved)) return moved;
  }
  return target;
}

ObjectiveValue min_ball_bisection(const MebInstance& instance,
                                  std::span<const std::size_t> subset,
                                  SolverStats* stats) {
  if (subset.empty())
    throw GeometryError(ErrorCode::EmptyInstance, "empty point subset");
  const auto& omega = instance.omega();
  const MetricKind kind = instance.kind();

  double lo = 0;
  if (kind == MetricKind::Hilbert)
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b)
        lo = std::max(lo, hilbert_distance(omega, instance.point(subset[a]),
                                           instance.point(subset[b])) / 2);

  double hi = lo;
  Region region = feasible_center_set(instance, subset, lo);
  if (region.empty()) {
    const Point2d& anchor = instance.point(subset[0]);
    hi = 0;
    for (std::size_t i : subset) hi = std::max(hi, instance.distance_from(anchor, i));
    hi += 1;
    region = feasible_center_set(instance, subset, hi);
    std::size_t iterations = 0;
    while (hi - lo > instance.tolerances().radius &&
           iterations < static_cast<std::size_t>(kMaxBisectionIterations)) {
      ++iterations;
      const double mid = lo + (hi - lo) / 2;
      Region at_mid = feasible_center_set(instance, subset, mid);
      if (at_mid.empty()) {
        lo = mid;
      } else {
        hi = mid;
        region = std::move(at_mid);
      }
    }
    if (stats) stats->bisection_iterations += iterations;
  }
  return settle(instance, subset, {hi, extract_center(omega, region)});
}

MebResult min_ball_bisection(const MebInstance& instance) {
  std::vector<std::size_t> all(instance.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  MebResult result;
  result.solver = SolverKind::Bisection;
  result.value = min_ball_bisection(instance, all, &result.stats);
  result.ball = ball(instance.omega(), instance.kind(), result.value.center,
                     result.value.radius);
  return result;
}

ObjectiveValue two_point_center(const MebInstance& instance, std::size_t p,
                                std::size_t q) {
  require_hilbert(instance);
  const auto& omega = instance.omega();
  const Point2d& a = instance.point(p);
  const Point2d& b = instance.point(q);
  if (detail::coincident(omega, a, b))
    throw GeometryError(ErrorCode::CoincidentPoints, "two-point center of coincident points");
  const double radius = hilbert_distance(omega, a, b) / 2;
  // The two balls touch along the bisector piece; if rounding separates
  // them, grow the radius by a few radius tolerances.
  double r = radius;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Region region = intersect(hilbert_ball(omega, a, r).region(),
                                    hilbert_ball(omega, b, r), omega.tolerance());
    if (!region.empty()) {
      const std::size_t pair[] = {p, q};
      return settle(instance, pair, {radius, extract_center(omega, region)});
    }
    r = radius + instance.tolerances().radius * std::ldexp(1.0, attempt);
  }
  throw GeometryError(ErrorCode::NoFeasibleBasis, "two-point balls do not meet");
}

Basis three_point_basis(const MebInstance& instance, std::size_t a, std::size_t b,
                        std::size_t c) {
  require_hilbert(instance);
  PairCache pairs(instance);
  return three_point_basis_cached(instance, pairs, a, b, c);
}

ObjectiveValue three_point_value(const MebInstance& instance, std::size_t a,
                                 std::size_t b, std::size_t c) {
  return three_point_basis(instance, a, b, c).value;
}

bool violation_test(const MebInstance& instance, const Basis& basis, std::size_t x) {
  if (basis.support.empty()) return true;
  return instance.distance_from(basis.value.center, x) >
         basis.value.radius + instance.tolerances().dist;
}

Basis basis_computation(const MebInstance& instance, const Basis& basis,
                        std::size_t x) {
  require_hilbert(instance);
  std::vector<std::size_t> all = basis.support;
  all.push_back(x);
  const auto& old = basis.support;

  PairCache pairs(instance);
  std::optional<Basis> best;
  auto consider = [&](Basis candidate) {
    if (!encloses(instance, candidate.value, all)) return;
    if (!best || candidate.value < best->value) best = std::move(candidate);
  };

  consider(Basis{{x}, {0.0, instance.point(x)}});
  for (std::size_t i = 0; i < old.size(); ++i)
    consider(Basis{{old[i], x}, pairs.get(old[i], x)});
  for (std::size_t i = 0; i < old.size(); ++i)
    for (std::size_t j = i + 1; j < old.size(); ++j)
      consider(three_point_basis_cached(instance, pairs, old[i], old[j], x));

  if (!best)
    throw GeometryError(ErrorCode::NoFeasibleBasis,
                        "no candidate basis encloses the basis and the new point");
  return *best;
}

namespace {

// Sharir-Welzl recursion over the prefix order[0, end) with the candidate
// basis `start`, unrolled into a loop. Violators move to the front.
Basis solve_prefix(const MebInstance& instance, std::vector<std::size_t>& order,
                   std::size_t end, const Basis& start, SolverStats& stats) {
  Basis current = start;
  for (std::size_t i = 0; i < end; ++i) {
    const std::size_t idx = order[i];
    if (start.contains_index(idx)) continue;
    ++stats.violation_tests;
    if (!violation_test(instance, current, idx)) continue;
    ++stats.basis_computations;
    Basis grown = basis_computation(instance, current, idx);
    std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i),
                order.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    current = solve_prefix(instance, order, i + 1, grown, stats);
  }
  return current;
}

}  // namespace

MebResult lp_type_solve(const MebInstance& instance) {
  require_hilbert(instance);
  const std::size_t n = instance.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(instance.seed());
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  MebResult result;
  result.solver = SolverKind::LpType;
  Basis basis = solve_prefix(instance, order, n, Basis{}, result.stats);

  // Guard against tolerance drift: resume from any point still outside.
  for (int pass = 0; pass < 4; ++pass) {
    const auto outside = std::find_if(order.begin(), order.end(), [&](std::size_t i) {
      return violation_test(instance, basis, i);
    });
    if (outside == order.end()) break;
    ++result.stats.basis_computations;
    basis = solve_prefix(instance, order, n, basis_computation(instance, basis, *outside),
                         result.stats);
  }

  result.basis = basis;
  result.value = basis.value;
  result.ball = ball(instance.omega(), instance.kind(), result.value.center,
                     result.value.radius);
  return result;
}

ObjectiveValue objective_f(const MebInstance& instance,
                           std::span<const std::size_t> subset) {
  if (subset.empty())
    throw GeometryError(ErrorCode::EmptyInstance, "objective of the empty set");
  if (subset.size() == 1) return {0.0, instance.point(subset[0])};
  if (instance.kind() != MetricKind::Hilbert) return min_ball_bisection(instance, subset);

  PairCache pairs(instance);
  std::optional<ObjectiveValue> best;
  auto consider = [&](const ObjectiveValue& v) {
    if (!encloses(instance, v, subset)) return;
    if (!best || v < *best) best = v;
  };
  const std::size_t n = subset.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      consider(pairs.get(subset[i], subset[j]));
      for (std::size_t k = j + 1; k < n; ++k)
        consider(three_point_basis_cached(instance, pairs, subset[i], subset[j], subset[k]).value);
    }
  if (!best)
    throw GeometryError(ErrorCode::NoFeasibleBasis, "no candidate basis encloses the subset");
  return *best;
}

}  // namespace hmeb
