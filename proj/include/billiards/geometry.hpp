#pragma once

#include <complex>
#include <optional>

namespace billiards {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTau = 2.0 * kPi;

// Tolerances shared by the geometric layer.
inline constexpr double kEpsAngle = 1e-12;  // boundary-angle equality
inline constexpr double kEpsDet = 1e-12;    // matrix determinant normalization
inline constexpr double kEpsTrace = 1e-9;   // parabolic/hyperbolic trace split

// Wraps an angle into [0, 2*pi).
double normalize_angle(double theta);

// Signed difference b - a wrapped into (-pi, pi].
double wrap_angle(double delta);

// Point on the ideal boundary of the disk model, stored as the angle of
// e^{i*theta} with theta normalized into [0, 2*pi).
struct IdealPoint {
  double theta = 0.0;
  IdealPoint() = default;
  explicit IdealPoint(double t) : theta(normalize_angle(t)) {}
  Complex unit() const { return {std::cos(theta), std::sin(theta)}; }
};

// True when the two boundary points coincide within kEpsAngle (cyclically).
bool same_ideal_point(IdealPoint a, IdealPoint b);

// Interior point of the unit-disk model.
struct DiskPoint {
  double u = 0.0;
  double v = 0.0;
  DiskPoint() = default;
  DiskPoint(double u_, double v_) : u(u_), v(v_) {}
  explicit DiskPoint(Complex z) : u(z.real()), v(z.imag()) {}
  Complex c() const { return {u, v}; }
};

// Boundary point of the upper half-plane model; infinity is kept symbolic.
struct UhpBoundary {
  double x = 0.0;
  bool infinite = false;
  static UhpBoundary inf() { return {0.0, true}; }
};

// Fixed model chart: z -> i(1+z)/(1-z) maps the disk onto the upper
// half-plane, sending 1 -> inf, -1 -> 0, 0 -> i.
Complex disk_to_uhp(DiskPoint p);
DiskPoint uhp_to_disk(Complex w);
UhpBoundary ideal_to_uhp(IdealPoint p);   // theta = 0 maps to infinity
IdealPoint uhp_to_ideal(UhpBoundary b);

// Geodesic with distinct ideal endpoints, oriented p -> q where the
// orientation matters (axis direction, side parameterization).
struct Geodesic {
  IdealPoint p, q;
  Geodesic(IdealPoint p_, IdealPoint q_);
};

// Hyperbolic isometry acting on the upper half-plane as a 2x2 real matrix,
// with an orientation flag. A reversing isometry conjugates its input
// first and then applies the matrix; its matrix has determinant -1, a
// preserving one +1. Matrices are kept normalized to |det| = 1 with
// trace >= 0, so m and -m are identified.
class Isometry {
 public:
  Isometry();  // identity
  Isometry(double a, double b, double c, double d, bool reversing = false);

  static Isometry identity() { return Isometry(); }
  // Rotation of the disk model about its center, anti-clockwise by phi.
  static Isometry disk_rotation(double phi);
  // z -> lambda * z on the half-plane, lambda > 0.
  static Isometry scaling(double lambda);

  double a() const { return m_[0]; }
  double b() const { return m_[1]; }
  double c() const { return m_[2]; }
  double d() const { return m_[3]; }
  bool reversing() const { return reversing_; }
  double trace() const { return m_[0] + m_[3]; }
  double det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  Isometry inverse() const;
  // Composition: (f * g)(z) = f(g(z)).
  friend Isometry operator*(const Isometry& f, const Isometry& g);

  Complex apply(Complex z) const;          // interior point, half-plane
  UhpBoundary apply(UhpBoundary b) const;  // boundary action
  DiskPoint apply(DiskPoint p) const;
  IdealPoint apply(IdealPoint p) const;
  Geodesic apply(const Geodesic& g) const;

 private:
  struct Raw {};
  // Composition path: entries of products of normalized matrices stay
  // accurate while their floating determinant drifts, so rescaling by it
  // would only inject noise. Raw construction trusts the entries.
  Isometry(double a, double b, double c, double d, bool reversing, Raw);

  double m_[4];  // row-major a, b, c, d
  bool reversing_;
  void normalize();
};

enum class IsometryClass { identity, elliptic, parabolic, hyperbolic, reversing };

IsometryClass classify(const Isometry& f);

// Translation length 2*arccosh(|tr|/2) of a hyperbolic isometry.
// Throws NumericError for any other class.
double translation_length(const Isometry& f);

// Axis of a hyperbolic isometry, oriented (repelling, attracting).
Geodesic axis(const Isometry& f);

// Reflection (orientation-reversing involution) fixing the geodesic.
Isometry reflect(const Geodesic& g);

// Distance in the disk model, curvature -1. distance((0,0),(r,0)) = 2 atanh r.
double distance(DiskPoint p, DiskPoint q);
// Distance in the half-plane model.
double distance_uhp(Complex z, Complex w);

// Circle carrying a geodesic of the disk model, as projective coefficients
// of A(x^2+y^2) + Bx + Cy + A = 0; A = 0 degenerates to a diameter. Every
// circle of this form meets the unit circle orthogonally.
struct GeodesicShape {
  double A = 0.0, B = 0.0, C = 1.0;
  bool is_line() const;
  Complex center() const;  // circle case only
  double radius() const;   // circle case only
};

GeodesicShape shape_of(const Geodesic& g);
// Geodesic through two distinct interior points.
GeodesicShape shape_through(DiskPoint p, DiskPoint q);
// Ideal endpoints of a shape; orientation of the pair is unspecified.
Geodesic endpoints_of(const GeodesicShape& s);

// True when the endpoint pairs of the two geodesics separate each other on
// the ideal boundary; endpoints closer than kEpsAngle count as shared and
// give false.
bool endpoints_interlace(const Geodesic& g1, const Geodesic& g2);

// Transversal intersection point. Returns a point exactly when
// endpoints_interlace holds; throws std::invalid_argument if the geodesics
// coincide.
std::optional<DiskPoint> geodesic_intersection(const Geodesic& g1, const Geodesic& g2);
std::optional<DiskPoint> shape_intersection(const GeodesicShape& s1, const GeodesicShape& s2);

// Unit tangent vector at p of the geodesic from p toward q, disk model.
// The models are conformal, so Euclidean angles between tangents equal
// hyperbolic angles.
Complex tangent_direction(DiskPoint p, DiskPoint q);
Complex tangent_direction(DiskPoint p, IdealPoint q);

// Unoriented angle in [0, pi] between two unit tangents.
double angle_between(Complex t1, Complex t2);

// Isometry taking g.p -> 0, g.q -> inf and the point of g closest to the
// disk center to i; conjugates arc length on g to log |z| on the
// imaginary axis.
Isometry geodesic_to_imaginary_axis(const Geodesic& g);

// Unique orientation-preserving isometry with from[j] -> to[j]; both
// triples must be in the same cyclic order on the boundary.
Isometry mobius_three_points(const IdealPoint from[3], const IdealPoint to[3]);

// Real cross-ratio of four distinct boundary points, computed in the disk
// chart as ((p-r)(q-s)) / ((p-s)(q-r)) on unit complex numbers.
double cross_ratio(IdealPoint p, IdealPoint q, IdealPoint r, IdealPoint s);

}  // namespace billiards
