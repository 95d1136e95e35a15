#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "billiards/errors.hpp"
#include "billiards/polygon.hpp"
#include "helpers.hpp"

using namespace billiards;

TEST_CASE("regular polygon vertices and feet") {
  IdealPolygon P = regular_polygon(4);
  CHECK(P.side_count() == 4);
  CHECK(P.vertex(1).theta == doctest::Approx(0.0));
  CHECK(P.vertex(2).theta == doctest::Approx(kPi / 2));
  CHECK(P.vertex(5).theta == doctest::Approx(0.0));  // wraps

  // Foot of side 1 sits at radius tan(pi/8) in direction pi/4.
  DiskPoint f = P.foot(1);
  double r = std::tan(kPi / 8);
  CHECK(f.u == doctest::Approx(r * std::cos(kPi / 4)).epsilon(1e-12));
  CHECK(f.v == doctest::Approx(r * std::sin(kPi / 4)).epsilon(1e-12));

  // All feet of a regular polygon are equidistant from the center.
  for (int k = 3; k <= 7; ++k) {
    IdealPolygon Q = regular_polygon(k);
    double r0 = std::hypot(Q.foot(1).u, Q.foot(1).v);
    for (int i = 2; i <= k; ++i)
      CHECK(std::hypot(Q.foot(i).u, Q.foot(i).v) ==
            doctest::Approx(r0).epsilon(1e-12));
  }
}

TEST_CASE("degenerate polygons are rejected") {
  CHECK_THROWS_AS(IdealPolygon({0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(IdealPolygon({0.0, 1e-9, 1.0}), ValidationError);
  CHECK_THROWS_AS(IdealPolygon({0.0, 2.0, 1.0}), ValidationError);  // clockwise
  CHECK_THROWS_AS(regular_polygon(2), ValidationError);
}

TEST_CASE("boundary coordinates parametrize sides by arc length") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ts(-3.0, 3.0);
  IdealPolygon P({0.1, 1.3, 2.9, 4.0, 5.5});
  for (int label = 1; label <= 5; ++label) {
    CHECK(side_coordinate(P, label, P.foot(label)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    for (int trial = 0; trial < 40; ++trial) {
      double t1 = ts(rng), t2 = ts(rng);
      DiskPoint p1 = boundary_point(P, {label, t1});
      DiskPoint p2 = boundary_point(P, {label, t2});
      // Signed arc length from the foot: distances subtract.
      CHECK(distance(p1, p2) == doctest::Approx(std::abs(t1 - t2)).epsilon(1e-9));
      CHECK(side_coordinate(P, label, p1) == doctest::Approx(t1).epsilon(1e-9));
      // The point stays on the side circle.
      const GeodesicShape& s = P.side_shape(label);
      double res = s.A * (p1.u * p1.u + p1.v * p1.v) + s.B * p1.u +
                   s.C * p1.v + s.A;
      CHECK(std::abs(res) < 1e-12);
    }
    // Large positive t runs toward vertex label+1, negative toward label.
    DiskPoint far = boundary_point(P, {label, 20.0});
    DiskPoint near = boundary_point(P, {label, -20.0});
    Complex vf = P.vertex(label + 1).unit(), vn = P.vertex(label).unit();
    CHECK(std::abs(Complex(far.u, far.v) - vf) < 1e-8);
    CHECK(std::abs(Complex(near.u, near.v) - vn) < 1e-8);
  }
  CHECK_THROWS_AS(boundary_point(P, {1, 2e6}), NumericError);
  CHECK_THROWS_AS(boundary_point(P, {9, 0.0}), ValidationError);
}

TEST_CASE("boundary interlacing detects separated pairs") {
  IdealPolygon P = regular_polygon(4);
  // Two crossing diagonals of the boundary order side1 < side2 < side3 < side4.
  CHECK(boundary_interlaced(P, {1, 0.0}, {2, 0.0}, {3, 0.0}, {4, 0.0}));
  CHECK_FALSE(boundary_interlaced(P, {1, 0.0}, {3, 0.0}, {2, 0.0}, {4, 0.0}));
  // Same side, ordered by t.
  CHECK(boundary_interlaced(P, {1, -1.0}, {1, 0.0}, {1, 1.0}, {2, 0.0}));
  CHECK_FALSE(boundary_interlaced(P, {1, -1.0}, {1, 1.0}, {1, 0.0}, {2, 0.0}));
  CHECK_THROWS_AS(
      boundary_interlaced(P, {1, 0.0}, {1, 0.0}, {2, 0.0}, {3, 0.0}),
      ValidationError);
  CHECK_THROWS_AS(
      boundary_interlaced(P, {1, 0.0}, {7, 0.0}, {2, 0.0}, {3, 0.0}),
      ValidationError);
}

TEST_CASE("chart of the regular polygon is the all-ones point") {
  for (int k = 3; k <= 8; ++k) {
    ModuliChart c = to_chart(regular_polygon(k));
    REQUIRE(c.k == k);
    REQUIRE(static_cast<int>(c.free_gaps.size()) == k - 3);
    for (double w : c.free_gaps) CHECK(w == doctest::Approx(1.0).epsilon(1e-10));
    for (double x : chart_log_coords(c))
      CHECK(std::abs(x) < 1e-10);
  }
}

TEST_CASE("chart round trip and pinned vertices") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> logw(-0.8, 0.8);
  for (int k = 4; k <= 7; ++k) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> x(k - 3);
      for (double& c : x) c = logw(rng);
      ModuliChart chart = chart_from_log(k, x);
      IdealPolygon P = from_chart(chart);
      CHECK(P.vertex(1).theta == doctest::Approx(0.0));
      CHECK(P.vertex(2).theta == doctest::Approx(kTau / k));
      CHECK(P.vertex(3).theta == doctest::Approx(2 * kTau / k));
      ModuliChart back = to_chart(P);
      for (int j = 0; j < k - 3; ++j)
        CHECK(back.free_gaps[j] ==
              doctest::Approx(chart.free_gaps[j]).epsilon(1e-10));
    }
  }
}

TEST_CASE("chart is invariant under orientation-preserving isometries") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 4 + static_cast<int>(rng() % 4);
    std::uniform_real_distribution<double> logw(-0.8, 0.8);
    std::vector<double> x(k - 3);
    for (double& c : x) c = logw(rng);
    IdealPolygon P = from_chart(chart_from_log(k, x));
    Isometry g = testutil::random_isometry(rng);
    IdealPolygon Q = transform(g, P);
    ModuliChart cp = to_chart(P), cq = to_chart(Q);
    for (int j = 0; j < k - 3; ++j)
      CHECK(cq.free_gaps[j] == doctest::Approx(cp.free_gaps[j]).epsilon(1e-10));
    // Cross-ratios of vertex quadruples agree as well.
    for (int j = 4; j <= k; ++j) {
      double rp = cross_ratio(P.vertex(1), P.vertex(2), P.vertex(3), P.vertex(j));
      double rq = cross_ratio(Q.vertex(1), Q.vertex(2), Q.vertex(3), Q.vertex(j));
      CHECK(rq == doctest::Approx(rp).epsilon(1e-10));
    }
  }
}

TEST_CASE("degenerate charts and reversing transforms are rejected") {
  CHECK_THROWS_AS(from_chart({5, {1.0}}), ValidationError);       // wrong arity
  CHECK_THROWS_AS(from_chart({5, {1.0, -2.0}}), ValidationError); // not positive
  CHECK_THROWS_AS(from_chart({5, {1e9, 1.0}}), ValidationError);  // gap collapses
  CHECK_THROWS_AS(from_chart({2, {}}), ValidationError);
  CHECK_NOTHROW(from_chart({3, {}}));

  IdealPolygon P = regular_polygon(4);
  Isometry flip = reflect(Geodesic(IdealPoint(0.0), IdealPoint(kPi)));
  CHECK_THROWS_AS(transform(flip, P), ValidationError);
}
