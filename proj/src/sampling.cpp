#include "hmeb/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

namespace hmeb {

Polygon Sampler::convex_polygon(int m) {
  const double two_pi = 2 * std::numbers::pi;
  for (;;) {
    std::vector<double> angles(static_cast<std::size_t>(m));
    for (auto& a : angles) a = uniform(0, two_pi);
    std::sort(angles.begin(), angles.end());
    double min_gap = angles.front() + two_pi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i)
      min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
    if (min_gap < 0.25 * two_pi / m) continue;

    const double ax = uniform(1.0, 3.0);
    const double ay = uniform(1.0, 3.0);
    const double theta = uniform(0, two_pi);
    const Point2d shift(uniform(-5, 5), uniform(-5, 5));
    const Eigen::Matrix2d rot = Eigen::Rotation2Dd(theta).toRotationMatrix();
    std::vector<Point2d> verts;
    for (double a : angles)
      verts.push_back(rot * Point2d(ax * std::cos(a), ay * std::sin(a)) + shift);
    Polygon omega(std::move(verts));
    if (omega.size() == static_cast<std::size_t>(m)) return omega;
  }
}

Point2d Sampler::interior_point(const Polygon& omega, double margin) {
  Point2d lo = omega[0], hi = omega[0];
  for (const auto& v : omega.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  const double clearance = margin * omega.diameter();
  for (;;) {
    const Point2d p(uniform(lo.x(), hi.x()), uniform(lo.y(), hi.y()));
    bool ok = true;
    for (std::size_t i = 0; i < omega.size() && ok; ++i)
      ok = omega.inside_distance(i, p) > clearance;
    if (ok) return p;
  }
}

std::vector<Point2d> Sampler::interior_points(const Polygon& omega, int n,
                                              double margin) {
  std::vector<Point2d> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back(interior_point(omega, margin));
  return pts;
}

}  // namespace hmeb
