#include "billiards/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "billiards/errors.hpp"

namespace billiards {

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTau);
  if (t < 0.0) t += kTau;
  if (t >= kTau) t = 0.0;  // fmod rounding at the seam
  return t;
}

double wrap_angle(double delta) {
  double d = std::fmod(delta, kTau);
  if (d > kPi) d -= kTau;
  if (d <= -kPi) d += kTau;
  return d;
}

bool same_ideal_point(IdealPoint a, IdealPoint b) {
  return std::abs(wrap_angle(a.theta - b.theta)) < kEpsAngle;
}

Complex disk_to_uhp(DiskPoint p) {
  Complex z = p.c();
  return Complex(0, 1) * (1.0 + z) / (1.0 - z);
}

DiskPoint uhp_to_disk(Complex w) {
  return DiskPoint((w - Complex(0, 1)) / (w + Complex(0, 1)));
}

UhpBoundary ideal_to_uhp(IdealPoint p) {
  // theta -> -cot(theta/2); the seam theta = 0 is the point at infinity.
  if (p.theta == 0.0) return UhpBoundary::inf();
  double half = 0.5 * p.theta;
  return {-std::cos(half) / std::sin(half), false};
}

IdealPoint uhp_to_ideal(UhpBoundary b) {
  if (b.infinite) return IdealPoint(0.0);
  return IdealPoint(2.0 * std::atan2(1.0, -b.x));
}

Geodesic::Geodesic(IdealPoint p_, IdealPoint q_) : p(p_), q(q_) {
  if (same_ideal_point(p, q))
    throw std::invalid_argument("geodesic endpoints coincide");
}

namespace {

// Determinant with full relative accuracy under cancellation (fused
// multiply-add splitting of a*d - b*c).
double accurate_det(const double m[4]) {
  double w = m[1] * m[2];
  double e = std::fma(m[1], m[2], -w);
  return std::fma(m[0], m[3], -w) - e;
}

}  // namespace

void Isometry::normalize() {
  double dt = accurate_det(m_);
  if (std::abs(dt) < 1e-200) throw NumericError("isometry matrix is singular");
  bool neg = dt < 0.0;
  if (neg != reversing_)
    throw std::invalid_argument(
        "matrix determinant sign inconsistent with orientation flag");
  double s = 1.0 / std::sqrt(std::abs(dt));
  for (double& e : m_) e *= s;
  if (m_[0] + m_[3] < 0.0)
    for (double& e : m_) e = -e;
}

Isometry::Isometry() : m_{1, 0, 0, 1}, reversing_(false) {}

Isometry::Isometry(double a, double b, double c, double d, bool reversing)
    : m_{a, b, c, d}, reversing_(reversing) {
  normalize();
}

Isometry::Isometry(double a, double b, double c, double d, bool reversing, Raw)
    : m_{a, b, c, d}, reversing_(reversing) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d))
    throw NumericError("isometry entries overflowed");
  if (m_[0] + m_[3] < 0.0)
    for (double& e : m_) e = -e;
}

Isometry Isometry::disk_rotation(double phi) {
  // Elliptic about i; its derivative there is e^{i phi}, an anti-clockwise
  // rotation of the disk about the center.
  double h = 0.5 * phi;
  return Isometry(std::cos(h), std::sin(h), -std::sin(h), std::cos(h), false);
}

Isometry Isometry::scaling(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("scaling needs lambda > 0");
  return Isometry(std::sqrt(lambda), 0, 0, 1.0 / std::sqrt(lambda), false);
}

Isometry Isometry::inverse() const {
  // (m, r)^{-1} = (m^{-1}, r) for real m of |det| 1; the adjugate of
  // accurate entries is accurate, so no renormalization.
  return Isometry(m_[3], -m_[1], -m_[2], m_[0], reversing_, Raw{});
}

Isometry operator*(const Isometry& f, const Isometry& g) {
  // Real matrices commute with complex conjugation, so the matrix part is a
  // plain product and the flags add mod 2.
  return Isometry(f.m_[0] * g.m_[0] + f.m_[1] * g.m_[2],
                  f.m_[0] * g.m_[1] + f.m_[1] * g.m_[3],
                  f.m_[2] * g.m_[0] + f.m_[3] * g.m_[2],
                  f.m_[2] * g.m_[1] + f.m_[3] * g.m_[3],
                  f.reversing_ != g.reversing_, Isometry::Raw{});
}

Complex Isometry::apply(Complex z) const {
  if (reversing_) z = std::conj(z);
  return (m_[0] * z + m_[1]) / (m_[2] * z + m_[3]);
}

UhpBoundary Isometry::apply(UhpBoundary b) const {
  // Conjugation fixes the boundary, so the flag plays no role here.
  if (b.infinite) {
    if (m_[2] == 0.0) return UhpBoundary::inf();
    return {m_[0] / m_[2], false};
  }
  double den = m_[2] * b.x + m_[3];
  // Points at the pole land at infinity; full cancellation is detected
  // relative to the magnitudes entering the sum, since normalization
  // rounding keeps it from being exact.
  double scale = std::abs(m_[2] * b.x) + std::abs(m_[3]);
  if (std::abs(den) <= 1e-12 * scale) return UhpBoundary::inf();
  return {(m_[0] * b.x + m_[1]) / den, false};
}

DiskPoint Isometry::apply(DiskPoint p) const {
  return uhp_to_disk(apply(disk_to_uhp(p)));
}

IdealPoint Isometry::apply(IdealPoint p) const {
  return uhp_to_ideal(apply(ideal_to_uhp(p)));
}

Geodesic Isometry::apply(const Geodesic& g) const {
  return Geodesic(apply(g.p), apply(g.q));
}

IsometryClass classify(const Isometry& f) {
  if (f.reversing()) return IsometryClass::reversing;
  double t = std::abs(f.trace());
  if (t > 2.0 + kEpsTrace) return IsometryClass::hyperbolic;
  if (t < 2.0 - kEpsTrace) return IsometryClass::elliptic;
  // Trace within tolerance of 2: identity iff m = +-I.
  if (std::abs(f.b()) < kEpsTrace && std::abs(f.c()) < kEpsTrace &&
      std::abs(f.a() - f.d()) < kEpsTrace)
    return IsometryClass::identity;
  return IsometryClass::parabolic;
}

double translation_length(const Isometry& f) {
  if (classify(f) != IsometryClass::hyperbolic)
    throw NumericError("translation length requires a hyperbolic isometry");
  return 2.0 * std::acosh(0.5 * std::abs(f.trace()));
}

Geodesic axis(const Isometry& f) {
  if (classify(f) != IsometryClass::hyperbolic)
    throw NumericError("axis requires a hyperbolic isometry");
  double a = f.a(), b = f.b(), c = f.c(), d = f.d();
  double disc = f.trace() * f.trace() - 4.0;  // det = +1
  double root = std::sqrt(disc);
  UhpBoundary fix1, fix2;
  if (c != 0.0) {
    fix1 = {(a - d + root) / (2.0 * c), false};
    fix2 = {(a - d - root) / (2.0 * c), false};
  } else {
    fix1 = UhpBoundary::inf();
    fix2 = {b / (d - a), false};
  }
  // The derivative at a finite fixed point x is (cx+d)^{-2}; at infinity it
  // is (a/d)^2. The attracting endpoint goes second.
  auto attracting = [&](const UhpBoundary& p) {
    if (p.infinite) return std::abs(a) > std::abs(d);
    return std::abs(c * p.x + d) > 1.0;
  };
  bool fix1_attracts = attracting(fix1);
  UhpBoundary rep = fix1_attracts ? fix2 : fix1;
  UhpBoundary att = fix1_attracts ? fix1 : fix2;
  return Geodesic(uhp_to_ideal(rep), uhp_to_ideal(att));
}

Isometry reflect(const Geodesic& g) {
  UhpBoundary p = ideal_to_uhp(g.p);
  UhpBoundary q = ideal_to_uhp(g.q);
  if (p.infinite || q.infinite) {
    double x0 = p.infinite ? q.x : p.x;
    return Isometry(-1.0, 2.0 * x0, 0.0, 1.0, true);  // z -> 2 x0 - conj z
  }
  double c = 0.5 * (p.x + q.x);
  double r = 0.5 * std::abs(q.x - p.x);
  // Inversion in the circle of center c, radius r.
  return Isometry(c, r * r - c * c, 1.0, -c, true);
}

double distance(DiskPoint p, DiskPoint q) {
  Complex zp = p.c(), zq = q.c();
  double num = std::abs(zp - zq);
  double den = std::abs(1.0 - std::conj(zq) * zp);
  return 2.0 * std::atanh(num / den);
}

double distance_uhp(Complex z, Complex w) {
  double n = std::norm(z - w);
  return std::acosh(1.0 + 0.5 * n / (z.imag() * w.imag()));
}

bool GeodesicShape::is_line() const {
  return std::abs(A) * 1e9 < std::hypot(B, C);
}

Complex GeodesicShape::center() const { return {-B / (2.0 * A), -C / (2.0 * A)}; }

double GeodesicShape::radius() const {
  // Orthogonality to the unit circle gives |center|^2 = 1 + r^2.
  return std::sqrt(std::max(0.0, std::norm(center()) - 1.0));
}

namespace {

GeodesicShape shape_from_rows(double a0, double a1, double a2, double b0,
                              double b1, double b2) {
  // Null direction of the two incidence rows, as a cross product.
  GeodesicShape s;
  s.A = a1 * b2 - a2 * b1;
  s.B = a2 * b0 - a0 * b2;
  s.C = a0 * b1 - a1 * b0;
  double n = std::sqrt(s.A * s.A + s.B * s.B + s.C * s.C);
  if (n < 1e-300) throw std::invalid_argument("degenerate geodesic shape");
  s.A /= n;
  s.B /= n;
  s.C /= n;
  return s;
}

}  // namespace

GeodesicShape shape_of(const Geodesic& g) {
  // Boundary point e^{i t} lies on the shape iff 2A + B cos t + C sin t = 0.
  return shape_from_rows(2.0, std::cos(g.p.theta), std::sin(g.p.theta), 2.0,
                         std::cos(g.q.theta), std::sin(g.q.theta));
}

GeodesicShape shape_through(DiskPoint p, DiskPoint q) {
  return shape_from_rows(std::norm(p.c()) + 1.0, p.u, p.v,
                         std::norm(q.c()) + 1.0, q.u, q.v);
}

Geodesic endpoints_of(const GeodesicShape& s) {
  double r = std::hypot(s.B, s.C);
  if (r < 1e-300) throw std::invalid_argument("shape has no boundary points");
  double phi = std::atan2(s.C, s.B);
  double cosoff = std::clamp(-2.0 * s.A / r, -1.0, 1.0);
  double off = std::acos(cosoff);
  return Geodesic(IdealPoint(phi + off), IdealPoint(phi - off));
}

bool endpoints_interlace(const Geodesic& g1, const Geodesic& g2) {
  IdealPoint pts[3] = {g1.q, g2.p, g2.q};
  for (IdealPoint x : pts)
    if (same_ideal_point(g1.p, x)) return false;
  if (same_ideal_point(g1.q, g2.p) || same_ideal_point(g1.q, g2.q) ||
      same_ideal_point(g2.p, g2.q))
    return false;
  // Walk anti-clockwise from g1.p; exactly one endpoint of g2 must sit
  // strictly between g1.p and g1.q.
  double oq = normalize_angle(g1.q.theta - g1.p.theta);
  double o2p = normalize_angle(g2.p.theta - g1.p.theta);
  double o2q = normalize_angle(g2.q.theta - g1.p.theta);
  return (o2p < oq) != (o2q < oq);
}

std::optional<DiskPoint> shape_intersection(const GeodesicShape& s1,
                                            const GeodesicShape& s2) {
  // Both circles have power 1 at the origin, so their radical line passes
  // through it. Direction of that line:
  double lx = s1.A * s2.B - s2.A * s1.B;
  double ly = s1.A * s2.C - s2.A * s1.C;
  double ln = std::hypot(lx, ly);
  if (ln < 1e-14) {
    if (s1.is_line() && s2.is_line()) {
      double cr = s1.B * s2.C - s1.C * s2.B;
      if (std::abs(cr) < 1e-14)
        throw std::invalid_argument("coincident geodesics");
      return DiskPoint(0.0, 0.0);
    }
    throw std::invalid_argument("coincident geodesics");
  }
  double dx = ly / ln, dy = -lx / ln;
  const GeodesicShape& s = std::abs(s1.A) >= std::abs(s2.A) ? s1 : s2;
  if (std::abs(s.A) < 1e-14) return DiskPoint(0.0, 0.0);  // two diameters
  // Points t*(dx,dy) on the circle: A t^2 + (B dx + C dy) t + A = 0; the
  // roots have product 1 and the interior intersection is the |t| <= 1 one.
  double beta = s.B * dx + s.C * dy;
  double disc = beta * beta - 4.0 * s.A * s.A;
  if (disc < 0.0) return std::nullopt;
  double qv = -0.5 * (beta + std::copysign(std::sqrt(disc), beta));
  double t1 = qv / s.A, t2 = s.A / qv;
  double t = std::abs(t1) <= 1.0 ? t1 : t2;
  return DiskPoint(t * dx, t * dy);
}

std::optional<DiskPoint> geodesic_intersection(const Geodesic& g1,
                                               const Geodesic& g2) {
  if (!endpoints_interlace(g1, g2)) {
    // Distinct non-interlaced geodesics never meet inside the disk, but a
    // coincident pair must still be rejected.
    bool same_set = (same_ideal_point(g1.p, g2.p) && same_ideal_point(g1.q, g2.q)) ||
                    (same_ideal_point(g1.p, g2.q) && same_ideal_point(g1.q, g2.p));
    if (same_set) throw std::invalid_argument("coincident geodesics");
    return std::nullopt;
  }
  auto pt = shape_intersection(shape_of(g1), shape_of(g2));
  if (!pt)
    throw NumericError("interlaced geodesics failed to intersect numerically");
  return pt;
}

Complex tangent_direction(DiskPoint p, DiskPoint q) {
  // Push p to the center; the geodesic becomes a straight ray there and the
  // derivative of the chart at the center is a positive real factor.
  Complex num = q.c() - p.c();
  Complex den = 1.0 - std::conj(p.c()) * q.c();
  Complex dir = num / den;
  double n = std::abs(dir);
  if (n < 1e-300) throw std::invalid_argument("tangent of a point pair needs distinct points");
  return dir / n;
}

Complex tangent_direction(DiskPoint p, IdealPoint q) {
  Complex num = q.unit() - p.c();
  Complex den = 1.0 - std::conj(p.c()) * q.unit();
  Complex dir = num / den;
  return dir / std::abs(dir);
}

double angle_between(Complex t1, Complex t2) {
  double dot = t1.real() * t2.real() + t1.imag() * t2.imag();
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

Isometry geodesic_to_imaginary_axis(const Geodesic& g) {
  UhpBoundary p = ideal_to_uhp(g.p);
  UhpBoundary q = ideal_to_uhp(g.q);
  Isometry base = [&] {
    if (q.infinite) return Isometry(1.0, -p.x, 0.0, 1.0);   // z - p
    if (p.infinite) return Isometry(0.0, -1.0, 1.0, -q.x);  // -1/(z - q)
    if (p.x > q.x) return Isometry(1.0, -p.x, 1.0, -q.x);
    return Isometry(-1.0, p.x, 1.0, -q.x);
  }();
  // The disk center sits at i; rescale so its foot on the axis lands at i.
  Complex w = base.apply(Complex(0, 1));
  return Isometry::scaling(1.0 / std::abs(w)) * base;
}

namespace {

struct Mat2 {
  double a, b, c, d;
};

// Matrix of the Moebius map sending (x1, x2, x3) to (0, 1, inf). Its
// determinant may have either sign; only the final composition needs to
// preserve the half-plane.
Mat2 to_standard_triple(const UhpBoundary x[3]) {
  if (x[0].infinite) return {0.0, x[1].x - x[2].x, 1.0, -x[2].x};
  if (x[1].infinite) return {1.0, -x[0].x, 1.0, -x[2].x};
  if (x[2].infinite) return {1.0, -x[0].x, 0.0, x[1].x - x[0].x};
  double s = x[1].x - x[2].x;
  double t = x[1].x - x[0].x;
  return {s, -x[0].x * s, t, -x[2].x * t};
}

}  // namespace

Isometry mobius_three_points(const IdealPoint from[3], const IdealPoint to[3]) {
  UhpBoundary xs[3], ys[3];
  for (int j = 0; j < 3; ++j) {
    xs[j] = ideal_to_uhp(from[j]);
    ys[j] = ideal_to_uhp(to[j]);
  }
  Mat2 n1 = to_standard_triple(xs);
  Mat2 n2 = to_standard_triple(ys);
  // n2^{-1} * n1, with the inverse taken as the adjugate.
  Mat2 i2{n2.d, -n2.b, -n2.c, n2.a};
  Mat2 m{i2.a * n1.a + i2.b * n1.c, i2.a * n1.b + i2.b * n1.d,
         i2.c * n1.a + i2.d * n1.c, i2.c * n1.b + i2.d * n1.d};
  if (m.a * m.d - m.b * m.c <= 0.0)
    throw std::invalid_argument(
        "boundary triples have opposite cyclic orientations");
  return Isometry(m.a, m.b, m.c, m.d, false);
}

double cross_ratio(IdealPoint p, IdealPoint q, IdealPoint r, IdealPoint s) {
  Complex zp = p.unit(), zq = q.unit(), zr = r.unit(), zs = s.unit();
  Complex cr = ((zp - zr) * (zq - zs)) / ((zp - zs) * (zq - zr));
  return cr.real();
}

}  // namespace billiards
