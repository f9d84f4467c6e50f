#include <cmath>
#include <vector>

#include "doctest.h"
#include "hmeb/core_geometry.hpp"
#include "hmeb/sampling.hpp"

using namespace hmeb;
using P = Point2d;

namespace {

Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

Polygon shifted_square(double dx) {
  return Polygon({{dx, 0}, {dx + 1, 0}, {dx + 1, 1}, {dx, 1}});
}

bool same_point(const P& a, const P& b, double tol = 1e-12) { return (a - b).norm() <= tol; }

void check_vertices(const Polygon& poly, const std::vector<P>& expected) {
  REQUIRE(poly.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(same_point(poly[i], expected[i]));
}

}  // namespace

TEST_CASE("orientation signs") {
  CHECK(orientation<double>({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation<double>({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orientation<double>({0, 0}, {0, 1}, {1, 0}) == -1);
  // Below tolerance relative to the coordinate scale.
  CHECK(orientation<double>({0, 0}, {1, 0}, {2, 1e-12}) == 0);
}

TEST_CASE("normalize_polygon") {
  SUBCASE("canonical square unchanged") {
    check_vertices(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  }
  SUBCASE("clockwise input is reversed") {
    check_vertices(Polygon({{0, 1}, {1, 1}, {1, 0}, {0, 0}}), {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  }
  SUBCASE("collinear vertex merged") {
    check_vertices(Polygon({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}}),
                   {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  }
  SUBCASE("rotated start") {
    check_vertices(Polygon({{1, 1}, {0, 1}, {0, 0}, {1, 0}}), {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  }
  SUBCASE("duplicates merged") {
    check_vertices(Polygon({{0, 0}, {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}),
                   {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  }
  SUBCASE("reflex vertex rejected") {
    try {
      Polygon({{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}});
      FAIL("expected NotConvex");
    } catch (const GeometryError& e) {
      CHECK(e.code() == ErrorCode::NotConvex);
    }
  }
  SUBCASE("pentagram rejected") {
    std::vector<P> star;
    for (int k = 0; k < 5; ++k) {
      const double a = 2 * M_PI * (2 * k) / 5;
      star.emplace_back(std::cos(a), std::sin(a));
    }
    CHECK_THROWS_AS((void)Polygon(star), GeometryError);
  }
  SUBCASE("degenerate inputs") {
    for (const auto& raw : std::vector<std::vector<P>>{
             {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {0, 0}, {0, 0}}}) {
      try {
        (void)Polygon(raw);
        FAIL("expected Degenerate");
      } catch (const GeometryError& e) {
        CHECK(e.code() == ErrorCode::Degenerate);
      }
    }
  }
}

TEST_CASE("normalize_polygon is idempotent") {
  Sampler s(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon p = s.convex_polygon(s.uniform_int(3, 12));
    const Polygon again(p.vertices());
    REQUIRE(again.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(again[i] == p[i]);
  }
}

TEST_CASE("point_location") {
  const Polygon sq = unit_square();
  CHECK(point_location(sq, P(0.5, 0.5)) == Location::Interior);
  CHECK(point_location(sq, P(1, 0.5)) == Location::Boundary);
  CHECK(point_location(sq, P(2, 2)) == Location::Exterior);
  CHECK(point_location(sq, P(0, 0)) == Location::Boundary);
  CHECK(point_location(sq, P(0.5, 1e-12)) == Location::Boundary);
}

TEST_CASE("ray_boundary_intersection") {
  const Polygon sq = unit_square();
  auto h = ray_boundary_intersection(sq, P(0.5, 0.5), P(1, 0));
  CHECK(same_point(h.hit, P(1, 0.5)));
  CHECK(h.distance == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h.edge_index == 1);

  h = ray_boundary_intersection(sq, P(0.5, 0.5), P(1, 1));
  CHECK(same_point(h.hit, P(1, 1)));
  CHECK(h.distance == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(h.edge_index == 2);  // vertex (1,1) starts edge 2

  h = ray_boundary_intersection(sq, P(0.25, 0.5), P(-1, 0));
  CHECK(same_point(h.hit, P(0, 0.5)));
  CHECK(h.distance == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(ray_boundary_intersection(sq, P(1, 0.5), P(1, 0)), GeometryError);
  CHECK_THROWS_AS(ray_boundary_intersection(sq, P(0.5, 0.5), P(0, 0)), GeometryError);
}

TEST_CASE("ray hits lie on the boundary and on the ray") {
  Sampler s(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Polygon omega = s.convex_polygon(s.uniform_int(3, 12));
    const P p = s.interior_point(omega);
    const double a = s.uniform(0, 2 * M_PI);
    const P dir(std::cos(a), std::sin(a));
    const auto h = ray_boundary_intersection(omega, p, dir);
    CHECK(point_location(omega, h.hit) == Location::Boundary);
    CHECK(std::abs(cross<double>(h.hit - p, dir)) <= kGeomEps * omega.scale());
    CHECK((h.hit - p).dot(dir) > 0);
    // The reported edge contains the hit.
    CHECK(std::abs(omega.inside_distance(h.edge_index, h.hit)) <= 1e-9 * omega.scale());
  }
}

TEST_CASE("chord_frame") {
  const Polygon sq = unit_square();
  auto c = chord_frame(sq, P(0.5, 0.5), P(0.75, 0.5));
  CHECK(same_point(c.p_prime, P(0, 0.5)));
  CHECK(same_point(c.q_prime, P(1, 0.5)));

  c = chord_frame(sq, P(0.25, 0.25), P(0.75, 0.75));
  CHECK(same_point(c.p_prime, P(0, 0)));
  CHECK(same_point(c.q_prime, P(1, 1)));

  // Line through (0.5,0.5) with slope 0.4 meets x=0 at y=0.3 and x=1 at 0.7.
  c = chord_frame(sq, P(0.5, 0.5), P(0.75, 0.6));
  CHECK(same_point(c.p_prime, P(0, 0.3), 1e-12));
  CHECK(same_point(c.q_prime, P(1, 0.7), 1e-12));
  CHECK(c.dQP() == doctest::Approx((P(0.75, 0.6) - P(0, 0.3)).norm()));
  CHECK(c.dQQ() == doctest::Approx((P(0.75, 0.6) - P(1, 0.7)).norm()));

  try {
    chord_frame(sq, P(0.5, 0.5), P(0.5, 0.5));
    FAIL("expected CoincidentPoints");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::CoincidentPoints);
  }
}

TEST_CASE("chord_frame ordering on random chords") {
  Sampler s(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Polygon omega = s.convex_polygon(s.uniform_int(3, 12));
    const P p = s.interior_point(omega);
    const P q = s.interior_point(omega);
    const auto c = chord_frame(omega, p, q);
    CHECK(c.dPP() > 0);
    CHECK(c.dQQ() > 0);
    CHECK(c.dPP() < c.dQP());
    CHECK(c.dQQ() < c.dPQ());
  }
}

TEST_CASE("clip_convex") {
  const Polygon sq = unit_square();
  auto r = clip_convex(sq, shifted_square(0.5));
  REQUIRE(r.kind() == ClipKind::Polygon);
  check_vertices(r.polygon(), {{0.5, 0}, {1, 0}, {1, 1}, {0.5, 1}});

  r = clip_convex(sq, shifted_square(1));
  REQUIRE(r.kind() == ClipKind::Segment);
  CHECK(same_point(r.segment().a, P(1, 0)));
  CHECK(same_point(r.segment().b, P(1, 1)));

  r = clip_convex(sq, shifted_square(2));
  CHECK(r.kind() == ClipKind::Empty);

  // Corner contact.
  r = clip_convex(sq, Polygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}}));
  REQUIRE(r.kind() == ClipKind::Point);
  CHECK(same_point(r.point(), P(1, 1)));
}

TEST_CASE("clip_convex properties") {
  Sampler s(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Polygon a = s.convex_polygon(s.uniform_int(3, 12));
    const Polygon b = s.convex_polygon(s.uniform_int(3, 12));

    const auto self = clip_convex(a, a);
    REQUIRE(self.kind() == ClipKind::Polygon);
    CHECK(self.polygon().size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_point(self.polygon()[i], a[i], 1e-9));

    const auto ab = clip_convex(a, b);
    const auto ba = clip_convex(b, a);
    CHECK(ab.kind() == ba.kind());
    if (ab.kind() == ClipKind::Polygon && ba.kind() == ClipKind::Polygon) {
      // Same normalized vertex list up to tolerance.
      REQUIRE(ab.polygon().size() == ba.polygon().size());
      for (std::size_t i = 0; i < ab.polygon().size(); ++i)
        CHECK(same_point(ab.polygon()[i], ba.polygon()[i], 1e-8));
      CHECK(ab.polygon().area() == doctest::Approx(ba.polygon().area()).epsilon(1e-9));
    }
    for (const auto& v : ab.points()) {
      CHECK(point_location(a, v) != Location::Exterior);
      CHECK(point_location(b, v) != Location::Exterior);
    }
  }
}

TEST_CASE("convex_hull") {
  const std::vector<P> square_and_center{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  check_vertices(convex_hull(square_and_center), {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  check_vertices(convex_hull(std::vector<P>{{0, 0}, {1, 0}, {0.5, 1}}),
                 {{0, 0}, {1, 0}, {0.5, 1}});
  check_vertices(convex_hull(std::vector<P>{{0.25, 0.25}, {0.75, 0.25}, {0.75, 0.75},
                                            {0.25, 0.75}, {0.5, 0.25}}),
                 {{0.25, 0.25}, {0.75, 0.25}, {0.75, 0.75}, {0.25, 0.75}});
  try {
    convex_hull(std::vector<P>{{0, 0}, {1, 1}, {3, 3}});
    FAIL("expected Degenerate");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::Degenerate);
  }
}

TEST_CASE("convex_hull contains its inputs") {
  Sampler s(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<P> pts;
    const int n = s.uniform_int(3, 40);
    for (int i = 0; i < n; ++i) pts.emplace_back(s.uniform(-3, 3), s.uniform(-3, 3));
    const Polygon hull = convex_hull(pts);
    for (const auto& p : pts) CHECK(point_location(hull, p) != Location::Exterior);
    CHECK(Polygon(hull.vertices()).size() == hull.size());
  }
}

TEST_CASE("lexicographic_min") {
  CHECK(same_point(lexicographic_min(ClipResult<double>{unit_square()}), P(0, 0)));
  CHECK(same_point(
      lexicographic_min(ClipResult<double>{Segment2<double>::make(P(1, 1), P(1, 0))}), P(1, 0)));
  CHECK(same_point(lexicographic_min(ClipResult<double>{P(0.3, 0.7)}), P(0.3, 0.7)));
  CHECK_THROWS_AS(lexicographic_min(ClipResult<double>{}), GeometryError);
}
