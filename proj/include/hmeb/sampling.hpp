#pragma once

// Seeded random domains and interior point sets for tests, the acceptance
// suite and the benchmark. Only raw 64-bit draws from mt19937_64 are used,
// so sequences are identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "hmeb/meb_solver.hpp"

namespace hmeb {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return double(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t next() { return rng_(); }

  /// A convex polygon with exactly m vertices: points on a random ellipse at
  /// well-separated angles, rotated and translated.
  Polygon convex_polygon(int m);

  /// Uniform over the part of omega at least margin * diameter away from
  /// the boundary.
  Point2d interior_point(const Polygon& omega, double margin = 0.01);
  std::vector<Point2d> interior_points(const Polygon& omega, int n,
                                       double margin = 0.01);

 private:
  std::mt19937_64 rng_;
};

}  // namespace hmeb
