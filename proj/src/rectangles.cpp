#include "billiards/rectangles.hpp"

#include <cmath>
#include <limits>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

void check_class(int n, int m, double c) {
  if (n == 0 && m == 0) throw ValidationError("homotopy class (0, 0)");
  if (!(c > 0.0)) throw ValidationError("rectangle parameter must be positive");
}

double leg(double p, double q) { return std::hypot(p, q); }

}  // namespace

double closed_form_length(int n, int m, double c) {
  check_class(n, m, c);
  return 2.0 * leg(n * c, m / c) + 2.0 * leg(m * c, n / c);
}

FamilyLengths family_lengths(int n, int m, double c) {
  check_class(n, m, c);
  FamilyLengths out;
  // Quarter-turn orbit of (n c, m / c).
  out.lengths[0] = leg(n * c, m / c);
  out.lengths[1] = leg(-static_cast<double>(m) * c, n / c);
  out.lengths[2] = leg(-static_cast<double>(n) * c, -static_cast<double>(m) / c);
  out.lengths[3] = leg(m * c, -static_cast<double>(n) / c);
  out.total = out.lengths[0] + out.lengths[1] + out.lengths[2] + out.lengths[3];
  out.degenerate = n == 0 || m == 0;
  return out;
}

RectangleMinimum minimize_c(int n, int m) {
  if (n == 0 && m == 0) throw ValidationError("homotopy class (0, 0)");
  auto f = [&](double t) { return closed_form_length(n, m, std::exp(t)); };
  // Golden section on [-5, 5] in t = log c.
  const double r = 0.6180339887498949;
  double a = -5.0, b = 5.0;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-12) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    }
  }
  RectangleMinimum out;
  double t = 0.5 * (a + b);
  out.c_star = std::exp(t);
  out.value = f(t);
  out.degenerate = n == 0 || m == 0;
  return out;
}

ScanVerdict inequality_scan(int n, int m, const std::vector<double>& grid) {
  if (n == 0 && m == 0) throw ValidationError("homotopy class (0, 0)");
  ScanVerdict v;
  v.worst_margin = std::numeric_limits<double>::infinity();
  v.worst_quartic = std::numeric_limits<double>::infinity();
  double base = closed_form_length(n, m, 1.0);
  for (double c : grid) {
    double q = c * c * c * c;
    v.worst_margin = std::min(v.worst_margin, closed_form_length(n, m, c) - base);
    v.worst_quartic = std::min(v.worst_quartic, q + 1.0 / q - 2.0);
  }
  v.all_hold = !grid.empty() && v.worst_margin >= -1e-12 &&
               v.worst_quartic >= -1e-12;
  return v;
}

}  // namespace billiards
