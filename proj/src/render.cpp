#include "billiards/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace billiards {

namespace {

constexpr int kSamplesPerArc = 32;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);  // normalize -0
  return buf;
}

std::string point(Complex z) { return num(z.real()) + "," + num(z.imag()); }

// Sample points of the geodesic arc between two interior points of its
// shape, endpoints included.
std::vector<Complex> arc_samples(const GeodesicShape& s, Complex a,
                                 Complex b) {
  std::vector<Complex> pts;
  pts.reserve(kSamplesPerArc + 1);
  if (s.is_line()) {
    for (int i = 0; i <= kSamplesPerArc; ++i) {
      double u = static_cast<double>(i) / kSamplesPerArc;
      pts.push_back(a + u * (b - a));
    }
    return pts;
  }
  Complex c = s.center();
  double ra = std::arg(a - c);
  double d = wrap_angle(std::arg(b - c) - ra);
  double r = std::abs(a - c);
  for (int i = 0; i <= kSamplesPerArc; ++i)
    pts.push_back(c + std::polar(r, ra + d * i / kSamplesPerArc));
  return pts;
}

// Side of the polygon as an SVG path: one circular arc or one segment.
std::string side_path(const IdealPolygon& P, int label) {
  const GeodesicShape& s = P.side_shape(label);
  Complex a = P.vertex(label).unit();
  Complex b = P.vertex(label + 1).unit();
  std::string d = "M " + point(a) + " ";
  if (s.is_line()) {
    d += "L " + point(b);
    return d;
  }
  double r = s.radius();
  Complex ca = a - s.center(), cb = b - s.center();
  double cross = ca.real() * cb.imag() - ca.imag() * cb.real();
  // Geodesic arcs stay below a half turn, so the small-arc flag is 0.
  d += "A " + num(r) + " " + num(r) + " 0 0 " + (cross > 0 ? "1" : "0") +
       " " + point(b);
  return d;
}

const char* kStrokePalette[] = {"#c22a2a", "#2a52c2", "#1d8a43", "#b58410",
                                "#7b3fb5", "#0f8a8a", "#b0368a", "#6a6a2a"};

}  // namespace

std::string render_svg(const IdealPolygon& P, const CyclicFamily& family) {
  std::string svg;
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 "
      "2.2\" width=\"640\" height=\"640\">\n";
  svg += "<style>\n";
  svg += ".disk { fill: none; stroke: #202020; stroke-width: 0.006; }\n";
  svg += ".side { fill: none; stroke: #202020; stroke-width: 0.009; }\n";
  svg += ".vertex { fill: #202020; }\n";
  size_t classes = family.trajectories.size();
  for (size_t i = 0; i < classes; ++i) {
    svg += ".traj" + std::to_string(i) + " { fill: none; stroke: " +
           kStrokePalette[i % 8] + "; stroke-width: 0.006; }\n";
  }
  svg += "</style>\n";
  svg += "<g transform=\"scale(1,-1)\">\n";
  svg += "<circle class=\"disk\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";

  for (int side = 1; side <= P.side_count(); ++side)
    svg += "<path class=\"side\" d=\"" + side_path(P, side) + "\"/>\n";

  for (size_t i = 0; i < family.trajectories.size(); ++i) {
    const Trajectory& t = family.trajectories[i];
    int n = static_cast<int>(t.hits.size());
    std::string d;
    for (int j = 0; j < n; ++j) {
      DiskPoint p = boundary_point(P, t.hits[j]);
      DiskPoint q = boundary_point(P, t.hits[(j + 1) % n]);
      GeodesicShape s = shape_through(p, q);
      std::vector<Complex> pts = arc_samples(s, p.c(), q.c());
      for (size_t u = (j == 0 ? 0 : 1); u < pts.size(); ++u)
        d += (d.empty() ? "M " : "L ") + point(pts[u]) + " ";
    }
    d += "Z";
    svg += "<path class=\"traj" + std::to_string(i) + "\" d=\"" + d + "\"/>\n";
  }

  for (int v = 1; v <= P.side_count(); ++v)
    svg += "<circle class=\"vertex\" cx=\"" + num(P.vertex(v).unit().real()) +
           "\" cy=\"" + num(P.vertex(v).unit().imag()) + "\" r=\"0.015\"/>\n";

  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace billiards
