#include "billiards/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "billiards/errors.hpp"

namespace billiards {

IdealPolygon::IdealPolygon(std::vector<double> vertex_angles)
    : k_(static_cast<int>(vertex_angles.size())) {
  if (k_ < 3) throw ValidationError("an ideal polygon needs at least 3 vertices");
  theta_.reserve(k_);
  for (double a : vertex_angles) theta_.push_back(normalize_angle(a));
  double winding = 0.0;
  for (int i = 0; i < k_; ++i) {
    double gap = normalize_angle(theta_[(i + 1) % k_] - theta_[i]);
    if (gap <= kDeltaGap || gap >= kTau - kDeltaGap)
      throw ValidationError("vertex " + std::to_string(i + 1) +
                            " is not separated from its successor");
    winding += gap;
  }
  if (std::abs(winding - kTau) > 1e-9)
    throw ValidationError("vertices must wind once anti-clockwise");

  shapes_.reserve(k_);
  frames_.reserve(k_);
  frames_inv_.reserve(k_);
  feet_.reserve(k_);
  for (int i = 0; i < k_; ++i) {
    Geodesic g(IdealPoint(theta_[i]), IdealPoint(theta_[(i + 1) % k_]));
    shapes_.push_back(shape_of(g));
    frames_.push_back(geodesic_to_imaginary_axis(g));
    frames_inv_.push_back(frames_.back().inverse());
    feet_.push_back(frames_inv_.back().apply(uhp_to_disk(Complex(0, 1))));
  }
}

int IdealPolygon::check_label(int label) const {
  if (label < 1 || label > k_)
    throw ValidationError("side label " + std::to_string(label) +
                          " outside 1.." + std::to_string(k_));
  return label - 1;
}

IdealPoint IdealPolygon::vertex(int index) const {
  int i = ((index - 1) % k_ + k_) % k_;
  return IdealPoint(theta_[i]);
}

Geodesic IdealPolygon::side(int label) const {
  int i = check_label(label);
  return Geodesic(IdealPoint(theta_[i]), IdealPoint(theta_[(i + 1) % k_]));
}

const GeodesicShape& IdealPolygon::side_shape(int label) const {
  return shapes_[check_label(label)];
}

DiskPoint IdealPolygon::foot(int label) const { return feet_[check_label(label)]; }

const Isometry& IdealPolygon::side_frame(int label) const {
  return frames_[check_label(label)];
}

const Isometry& IdealPolygon::side_frame_inverse(int label) const {
  return frames_inv_[check_label(label)];
}

IdealPolygon regular_polygon(int k) {
  if (k < 3) throw ValidationError("regular polygon needs k >= 3");
  std::vector<double> angles(k);
  for (int j = 0; j < k; ++j) angles[j] = kTau * j / k;
  return IdealPolygon(std::move(angles));
}

DiskPoint boundary_point(const IdealPolygon& P, BoundaryCoordinate bc) {
  if (!(std::abs(bc.t) <= kTMax))
    throw NumericError("side coordinate beyond the cusp guard");
  const Isometry& inv = P.side_frame_inverse(bc.side);
  double a = inv.a(), b = inv.b(), c = inv.c(), d = inv.d();
  // Evaluate inv(i e^t) without forming e^t for large t.
  Complex z;
  if (bc.t >= 0.0) {
    double s = std::exp(-bc.t);
    z = Complex(b * s, a) / Complex(d * s, c);
  } else {
    double s = std::exp(bc.t);
    z = Complex(b, a * s) / Complex(d, c * s);
  }
  return uhp_to_disk(z);
}

double side_coordinate(const IdealPolygon& P, int side, DiskPoint p) {
  Complex w = P.side_frame(side).apply(disk_to_uhp(p));
  double r = std::abs(w);
  if (!(r > 0.0) || !std::isfinite(r))
    throw NumericError("point does not project onto the side");
  return std::log(r);
}

namespace {

struct BoundaryPos {
  int side;
  double t;
  int group;  // 0 for {b1, b3}, 1 for {b2, b4}
};

bool pos_less(const BoundaryPos& a, const BoundaryPos& b) {
  if (a.side != b.side) return a.side < b.side;
  return a.t < b.t;
}

}  // namespace

bool coordinates_interlaced(BoundaryCoordinate b1, BoundaryCoordinate b2,
                            BoundaryCoordinate b3, BoundaryCoordinate b4) {
  BoundaryPos pos[4] = {{b1.side, b1.t, 0},
                        {b2.side, b2.t, 1},
                        {b3.side, b3.t, 0},
                        {b4.side, b4.t, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pos[i].side == pos[j].side && std::abs(pos[i].t - pos[j].t) <= 1e-9)
        throw ValidationError("boundary coordinates must be pairwise distinct");
  std::sort(pos, pos + 4, pos_less);
  // On a circle, the pairs interlace iff the groups alternate in sorted order.
  return pos[0].group != pos[1].group && pos[1].group != pos[2].group &&
         pos[2].group != pos[3].group;
}

bool boundary_interlaced(const IdealPolygon& P, BoundaryCoordinate b1,
                         BoundaryCoordinate b2, BoundaryCoordinate b3,
                         BoundaryCoordinate b4) {
  for (const BoundaryCoordinate& b : {b1, b2, b3, b4}) {
    if (b.side < 1 || b.side > P.side_count())
      throw ValidationError("boundary coordinate has an invalid side label");
  }
  return coordinates_interlaced(b1, b2, b3, b4);
}

IdealPolygon from_chart(const ModuliChart& chart) {
  int k = chart.k;
  if (k < 3) throw ValidationError("chart needs k >= 3");
  if (static_cast<int>(chart.free_gaps.size()) != k - 3)
    throw ValidationError("chart needs exactly k-3 gap weights");
  for (double w : chart.free_gaps)
    if (!(w > 0.0) || !std::isfinite(w))
      throw ValidationError("gap weights must be positive");
  std::vector<double> angles(k);
  angles[0] = 0.0;
  angles[1] = kTau / k;
  if (k >= 3) angles[2] = 2.0 * kTau / k;
  double budget = kTau - 2.0 * kTau / k;
  double total = 1.0;  // weight of the final gap
  for (double w : chart.free_gaps) total += w;
  double at = angles[2 % k];
  for (int j = 0; j < k - 3; ++j) {
    double gap = budget * chart.free_gaps[j] / total;
    if (gap <= kDeltaGap)
      throw ValidationError("chart point degenerates a vertex gap");
    at += gap;
    angles[3 + j] = at;
  }
  if (budget / total <= kDeltaGap && k > 3)
    throw ValidationError("chart point degenerates the final vertex gap");
  return IdealPolygon(std::move(angles));
}

ModuliChart to_chart(const IdealPolygon& P) {
  int k = P.side_count();
  IdealPoint from[3] = {P.vertex(1), P.vertex(2), P.vertex(3)};
  IdealPoint to[3] = {IdealPoint(0.0), IdealPoint(kTau / k),
                      IdealPoint(2.0 * kTau / k)};
  Isometry M = mobius_three_points(from, to);
  IdealPolygon Q = transform(M, P);
  ModuliChart chart;
  chart.k = k;
  chart.free_gaps.reserve(k - 3);
  const std::vector<double>& th = Q.angles();
  auto gap = [&](int i) {  // gap following vertex index i (0-based)
    return normalize_angle(th[(i + 1) % k] - th[i]);
  };
  double last = gap(k - 1);
  for (int j = 0; j < k - 3; ++j) chart.free_gaps.push_back(gap(2 + j) / last);
  return chart;
}

std::vector<double> chart_log_coords(const ModuliChart& chart) {
  std::vector<double> x;
  x.reserve(chart.free_gaps.size());
  for (double w : chart.free_gaps) x.push_back(std::log(w));
  return x;
}

ModuliChart chart_from_log(int k, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != k - 3)
    throw ValidationError("log chart needs exactly k-3 coordinates");
  ModuliChart chart;
  chart.k = k;
  chart.free_gaps.reserve(x.size());
  for (double c : x) chart.free_gaps.push_back(std::exp(c));
  return chart;
}

IdealPolygon transform(const Isometry& f, const IdealPolygon& P) {
  if (f.reversing())
    throw ValidationError("polygon transform requires an orientation-preserving map");
  std::vector<double> angles;
  angles.reserve(P.side_count());
  for (int j = 1; j <= P.side_count(); ++j)
    angles.push_back(f.apply(P.vertex(j)).theta);
  return IdealPolygon(std::move(angles));
}

}  // namespace billiards
