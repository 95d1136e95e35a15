#pragma once

#include <vector>

#include "billiards/geometry.hpp"

namespace billiards {

inline constexpr double kDeltaGap = 1e-6;  // minimal vertex separation
inline constexpr double kTMax = 1e6;       // cusp-escape guard on side coordinates

// Ideal polygon with k >= 3 vertices on the boundary circle, listed
// anti-clockwise. Vertices and sides are labelled 1..k; side i joins
// vertex i to vertex i+1 (cyclically).
class IdealPolygon {
 public:
  explicit IdealPolygon(std::vector<double> vertex_angles);

  int side_count() const { return k_; }
  IdealPoint vertex(int index) const;  // 1-based, wraps cyclically
  const std::vector<double>& angles() const { return theta_; }

  Geodesic side(int label) const;
  const GeodesicShape& side_shape(int label) const;
  // Point of the side geodesic closest to the disk center.
  DiskPoint foot(int label) const;
  // Isometry taking the side to the imaginary axis (vertex i -> 0,
  // vertex i+1 -> inf) with the foot at i; arc length along the side is
  // log |z| in that frame.
  const Isometry& side_frame(int label) const;
  const Isometry& side_frame_inverse(int label) const;

 private:
  int k_;
  std::vector<double> theta_;
  std::vector<GeodesicShape> shapes_;
  std::vector<Isometry> frames_;
  std::vector<Isometry> frames_inv_;
  std::vector<DiskPoint> feet_;
  int check_label(int label) const;
};

// Regular ideal polygon, vertices at angles 2*pi*(j-1)/k.
IdealPolygon regular_polygon(int k);

// Position on the boundary of the polygon: signed hyperbolic arc length t
// along side `side`, measured from the foot, positive toward vertex
// side+1 (the anti-clockwise direction of the boundary).
struct BoundaryCoordinate {
  int side = 1;
  double t = 0.0;
};

DiskPoint boundary_point(const IdealPolygon& P, BoundaryCoordinate bc);
// Inverse of boundary_point for points on the side geodesic.
double side_coordinate(const IdealPolygon& P, int side, DiskPoint p);

// True when {b1, b3} separates {b2, b4} in the cyclic order of the
// boundary. Coordinates must be pairwise distinct.
bool boundary_interlaced(const IdealPolygon& P, BoundaryCoordinate b1,
                         BoundaryCoordinate b2, BoundaryCoordinate b3,
                         BoundaryCoordinate b4);
// Same predicate on raw coordinates; (side, t) lexicographic order is the
// cyclic boundary order, so no polygon is needed.
bool coordinates_interlaced(BoundaryCoordinate b1, BoundaryCoordinate b2,
                            BoundaryCoordinate b3, BoundaryCoordinate b4);

// Chart on the moduli space of labelled ideal k-gons modulo
// orientation-preserving isometry: vertices 1..3 are pinned to
// (0, 2pi/k, 4pi/k) and the k-3 free gap weights fix the rest. A weight
// vector w gives trailing gaps proportional to (w_1, ..., w_{k-3}, 1)
// scaled onto the remaining angle budget, so the regular polygon is the
// all-ones point.
struct ModuliChart {
  int k = 3;
  std::vector<double> free_gaps;  // k-3 positive weights
};

IdealPolygon from_chart(const ModuliChart& chart);
ModuliChart to_chart(const IdealPolygon& P);

// Log-gap coordinates ln(w_j); the regular polygon is the origin.
std::vector<double> chart_log_coords(const ModuliChart& chart);
ModuliChart chart_from_log(int k, const std::vector<double>& x);

// Image polygon under an orientation-preserving isometry, labels kept.
IdealPolygon transform(const Isometry& f, const IdealPolygon& P);

}  // namespace billiards
