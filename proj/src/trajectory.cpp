#include "billiards/trajectory.hpp"

#include <cmath>
#include <string>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

void check_compatible(const IdealPolygon& P, const BilliardSequence& seq) {
  if (seq.k() != P.side_count())
    throw ValidationError("sequence side count does not match the polygon");
}

std::vector<Isometry> side_reflections(const IdealPolygon& P) {
  std::vector<Isometry> reflections;
  reflections.reserve(P.side_count());
  for (int i = 1; i <= P.side_count(); ++i)
    reflections.push_back(reflect(P.side(i)));
  return reflections;
}

// Holonomy of the word rotated to start at position j.
Isometry rotated_word(const std::vector<Isometry>& refl,
                      const std::vector<int>& a, int j) {
  int n = static_cast<int>(a.size());
  Isometry w = refl[a[j] - 1];
  for (int s = 1; s < n; ++s) w = w * refl[a[(j + s) % n] - 1];
  return w;
}

}  // namespace

Isometry holonomy(const IdealPolygon& P, const BilliardSequence& seq) {
  check_compatible(P, seq);
  return rotated_word(side_reflections(P), seq.labels(), 0);
}

Trajectory trajectory(const IdealPolygon& P, const BilliardSequence& seq) {
  check_compatible(P, seq);
  std::vector<Isometry> refl = side_reflections(P);
  const std::vector<int>& a = seq.labels();
  int n = seq.length();
  bool odd = (n % 2) != 0;
  Isometry h = rotated_word(refl, a, 0);
  Isometry H = odd ? h * h : h;
  if (classify(H) != IsometryClass::hyperbolic)
    throw NumericError("holonomy of the closed word is not hyperbolic");

  Trajectory out{seq, {}, translation_length(H) * (odd ? 0.5 : 1.0), h};
  out.hits.reserve(n);
  for (int j = 0; j < n; ++j) {
    // The axis folded back to bounce j is the axis of the rotated word;
    // multiplying it afresh keeps the endpoints well separated where the
    // composite of the partial words would collapse them.
    Isometry hj = (j == 0) ? h : rotated_word(refl, a, j);
    Isometry Hj = odd ? hj * hj : hj;
    if (classify(Hj) != IsometryClass::hyperbolic)
      throw NumericError("rotated holonomy is not hyperbolic");
    auto x = geodesic_intersection(axis(Hj), P.side(a[j]));
    if (!x)
      throw NumericError("folded axis misses side " + std::to_string(a[j]));
    double t = side_coordinate(P, a[j], *x);
    if (!(std::abs(t) < kTMax))
      throw NumericError("trajectory hit escapes toward a cusp");
    out.hits.push_back({a[j], t});
  }
  return out;
}

namespace {

// Golden-section minimizer of a convex section, resolved to xtol.
template <typename F>
double golden_min(F&& f, double x2, double step, double xtol) {
  const double phi = 0.6180339887498949;
  double x1 = x2 - step, x3 = x2 + step;
  double f1 = f(x1), f2 = f(x2), f3 = f(x3);
  // Expand until the middle is no worse than both ends.
  while (f1 < f2 || f3 < f2) {
    if (f1 < f2) {
      x3 = x2;
      f3 = f2;
      x2 = x1;
      f2 = f1;
      step *= 2.0;
      x1 = x2 - step;
      f1 = f(x1);
    } else {
      x1 = x2;
      f1 = f2;
      x2 = x3;
      f2 = f3;
      step *= 2.0;
      x3 = x2 + step;
      f3 = f(x3);
    }
  }
  double a = x1, b = x3;
  double xl = b - phi * (b - a), xr = a + phi * (b - a);
  double fl = f(xl), fr = f(xr);
  while (b - a > xtol) {
    if (fl <= fr) {
      b = xr;
      xr = xl;
      fr = fl;
      xl = b - phi * (b - a);
      fl = f(xl);
    } else {
      a = xl;
      xl = xr;
      fl = fr;
      xr = a + phi * (b - a);
      fr = f(xr);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double length_variational(const IdealPolygon& P, const BilliardSequence& seq,
                          int max_sweeps) {
  check_compatible(P, seq);
  const std::vector<int>& a = seq.labels();
  int n = seq.length();
  std::vector<double> t(n, 0.0);
  std::vector<DiskPoint> pts(n);
  for (int j = 0; j < n; ++j) pts[j] = boundary_point(P, {a[j], t[j]});

  auto total = [&] {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += distance(pts[j], pts[(j + 1) % n]);
    return s;
  };

  double f = total();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_step = 0.0;
    for (int j = 0; j < n; ++j) {
      const DiskPoint& prev = pts[(j + n - 1) % n];
      const DiskPoint& next = pts[(j + 1) % n];
      auto section = [&](double tj) {
        DiskPoint p = boundary_point(P, {a[j], tj});
        return distance(prev, p) + distance(p, next);
      };
      double tj = golden_min(section, t[j], 0.5, 1e-12);
      max_step = std::max(max_step, std::abs(tj - t[j]));
      t[j] = tj;
      pts[j] = boundary_point(P, {a[j], tj});
    }
    double fnew = total();
    bool flat = f - fnew < 1e-14 * (1.0 + std::abs(fnew));
    f = fnew;
    if (max_step < 1e-12 || flat) break;
  }
  return f;
}

CyclicFamily cyclic_family(const IdealPolygon& P, const BilliardSequence& seq) {
  check_compatible(P, seq);
  CyclicFamily fam;
  fam.trajectories.reserve(seq.k());
  double sum = 0.0;
  for (int i = 0; i < seq.k(); ++i) {
    fam.trajectories.push_back(trajectory(P, shift(seq, i)));
    sum += fam.trajectories.back().length;
  }
  fam.average_length = sum / seq.k();
  return fam;
}

double average_length(const IdealPolygon& P, const BilliardSequence& seq) {
  return cyclic_family(P, seq).average_length;
}

}  // namespace billiards
