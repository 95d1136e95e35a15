#include "billiards/filling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

constexpr double kMergeTol = 1e-9;

bool same_boundary_coord(BoundaryCoordinate a, BoundaryCoordinate b) {
  return a.side == b.side && std::abs(a.t - b.t) <= kMergeTol;
}

Complex to_c(DiskPoint p) { return {p.u, p.v}; }

}  // namespace

ArcSegment make_arc(const IdealPolygon& P, BoundaryCoordinate e1,
                    BoundaryCoordinate e2, int owner) {
  if (same_boundary_coord(e1, e2))
    throw ValidationError("arc endpoints coincide");
  if (e1.side == e2.side)
    throw ValidationError("arc lies along a side");
  ArcSegment s;
  s.e1 = e1;
  s.e2 = e2;
  s.owner = owner;
  s.p1 = boundary_point(P, e1);
  s.p2 = boundary_point(P, e2);
  s.chord = shape_through(s.p1, s.p2);
  return s;
}

std::vector<ArcSegment> family_arcs(const IdealPolygon& P,
                                    const CyclicFamily& family) {
  std::vector<ArcSegment> arcs;
  for (size_t i = 0; i < family.trajectories.size(); ++i) {
    const std::vector<BoundaryCoordinate>& h = family.trajectories[i].hits;
    int n = static_cast<int>(h.size());
    for (int j = 0; j < n; ++j)
      arcs.push_back(make_arc(P, h[j], h[(j + 1) % n], static_cast<int>(i)));
  }
  return arcs;
}

bool interlace(const ArcSegment& s1, const ArcSegment& s2) {
  if (same_boundary_coord(s1.e1, s1.e2) || same_boundary_coord(s2.e1, s2.e2))
    throw ValidationError("arc endpoints coincide");
  if (same_boundary_coord(s1.e1, s2.e1) || same_boundary_coord(s1.e1, s2.e2) ||
      same_boundary_coord(s1.e2, s2.e1) || same_boundary_coord(s1.e2, s2.e2))
    return false;  // adjacency
  return coordinates_interlaced(s1.e1, s2.e1, s1.e2, s2.e2);
}

namespace {

// Arc-length coordinate along the supporting geodesic of a shape.
struct ChordFrame {
  Isometry frame;
  explicit ChordFrame(const GeodesicShape& s)
      : frame(geodesic_to_imaginary_axis(endpoints_of(s))) {}
  double coord(DiskPoint p) const {
    return std::log(std::abs(frame.apply(disk_to_uhp(p))));
  }
};

}  // namespace

std::optional<DiskPoint> intersects(const ArcSegment& s1,
                                    const ArcSegment& s2) {
  if (!interlace(s1, s2)) return std::nullopt;
  std::optional<DiskPoint> x = shape_intersection(s1.chord, s2.chord);
  if (!x)
    throw NumericError("interlaced arcs failed to produce an intersection");
  for (const ArcSegment* s : {&s1, &s2}) {
    ChordFrame f(s->chord);
    double a = f.coord(s->p1), b = f.coord(s->p2), v = f.coord(*x);
    if (v < std::min(a, b) - 1e-7 || v > std::max(a, b) + 1e-7)
      throw NumericError("intersection point escapes an arc");
  }
  return x;
}

bool connectivity(const IdealPolygon& P, const CyclicFamily& family) {
  std::vector<ArcSegment> arcs = family_arcs(P, family);
  if (arcs.empty()) return false;
  int m = static_cast<int>(arcs.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool touch = same_boundary_coord(arcs[i].e1, arcs[j].e1) ||
                   same_boundary_coord(arcs[i].e1, arcs[j].e2) ||
                   same_boundary_coord(arcs[i].e2, arcs[j].e1) ||
                   same_boundary_coord(arcs[i].e2, arcs[j].e2);
      if (touch || interlace(arcs[i], arcs[j])) unite(i, j);
    }
  }
  int root = find(0);
  for (int i = 1; i < m; ++i)
    if (find(i) != root) return false;
  return true;
}

bool non_adjacent_sides(const Trajectory& t) {
  int k = t.sequence.k();
  std::vector<int> sides;
  for (const BoundaryCoordinate& h : t.hits) sides.push_back(h.side);
  std::sort(sides.begin(), sides.end());
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
  for (size_t i = 0; i < sides.size(); ++i) {
    for (size_t j = i + 1; j < sides.size(); ++j) {
      int d = (sides[j] - sides[i]) % k;
      if (d != 1 && d != k - 1) return true;
    }
  }
  return false;
}

namespace {

// Deduplicated chord of the arrangement.
struct Chord {
  BoundaryCoordinate e1, e2;
  DiskPoint p1, p2;
  GeodesicShape shape;
  double s1, s2;  // frame coordinates of the endpoints
};

struct Node {
  Complex pos;
  int vertex_label = 0;                          // 0 when not an ideal vertex
  std::map<int, double> on_side;                 // side label -> t
  std::map<int, double> on_chord;                // chord index -> s
};

struct Edge {
  int n1, n2;
  GeodesicShape shape;
  bool is_side = false;
  int label = 0;  // side label or chord index
};

// Unit tangent of the shape at `from`, pointing along the arc toward `to`.
Complex arc_tangent(const GeodesicShape& s, Complex from, Complex to) {
  Complex d;
  if (s.is_line()) {
    d = to - from;
  } else {
    d = Complex(0, 1) * (from - s.center());
    // Geodesic arcs span less than half their circle, so the chord
    // direction picks the correct side.
    double dot = d.real() * (to - from).real() + d.imag() * (to - from).imag();
    if (dot < 0) d = -d;
  }
  return d / std::abs(d);
}

// Points along the arc from a to b for signed-area sampling.
void sample_arc(const GeodesicShape& s, Complex a, Complex b, int steps,
                std::vector<Complex>& out) {
  if (s.is_line()) {
    out.push_back(a);
    return;
  }
  Complex c = s.center();
  double ra = std::arg(a - c);
  double d = wrap_angle(std::arg(b - c) - ra);
  double r = std::abs(a - c);
  for (int i = 0; i < steps; ++i)
    out.push_back(c + std::polar(r, ra + d * i / steps));
}

struct Arrangement {
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  int face_total = 0;
  std::vector<FaceInfo> interior;

  void trace_faces();
};

// Half-edge walker: at every node the outgoing half-edges are sorted by
// angle; the successor of a half-edge is the clockwise neighbour of its
// twin, which traces each face with its interior on the left.
void Arrangement::trace_faces() {
  struct Half {
    int from, to, edge;
    double angle;
  };
  std::vector<Half> halves;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const Edge& ed = edges[e];
    Complex a = nodes[ed.n1].pos, b = nodes[ed.n2].pos;
    halves.push_back({ed.n1, ed.n2, e, std::arg(arc_tangent(ed.shape, a, b))});
    halves.push_back({ed.n2, ed.n1, e, std::arg(arc_tangent(ed.shape, b, a))});
  }
  int H = static_cast<int>(halves.size());
  std::vector<std::vector<int>> outgoing(nodes.size());
  for (int h = 0; h < H; ++h) outgoing[halves[h].from].push_back(h);
  for (std::vector<int>& out : outgoing)
    std::sort(out.begin(), out.end(), [&](int x, int y) {
      return halves[x].angle < halves[y].angle;
    });
  std::vector<int> next(H, -1);
  for (int h = 0; h < H; ++h) {
    int twin = h ^ 1;
    const std::vector<int>& out = outgoing[halves[h].to];
    int deg = static_cast<int>(out.size());
    int at = static_cast<int>(std::find(out.begin(), out.end(), twin) -
                              out.begin());
    next[h] = out[(at - 1 + deg) % deg];
  }

  std::vector<int> visited(H, 0);
  for (int h0 = 0; h0 < H; ++h0) {
    if (visited[h0]) continue;
    std::vector<int> walk;
    int h = h0;
    do {
      visited[h] = 1;
      walk.push_back(h);
      h = next[h];
    } while (h != h0);
    ++face_total;

    std::vector<Complex> samples;
    for (int w : walk) {
      const Half& hf = halves[w];
      sample_arc(edges[hf.edge].shape, nodes[hf.from].pos, nodes[hf.to].pos,
                 8, samples);
    }
    double area = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
      Complex p = samples[i], q = samples[(i + 1) % samples.size()];
      area += p.real() * q.imag() - q.real() * p.imag();
    }
    if (area < 0.0) continue;  // outer face

    FaceInfo info;
    info.edge_count = static_cast<int>(walk.size());
    int m = static_cast<int>(walk.size());
    auto is_side = [&](int i) { return edges[halves[walk[i]].edge].is_side; };
    int runs = 0, verts = 0;
    bool whole = false;
    bool any_arc = false;
    for (int i = 0; i < m; ++i) any_arc = any_arc || !is_side(i);
    if (!any_arc) {
      runs = 1;
      int count = 0;
      for (int i = 0; i < m; ++i)
        if (nodes[halves[walk[i]].to].vertex_label != 0) ++count;
      verts = count;
      whole = count >= 2;
    } else {
      for (int i = 0; i < m; ++i) {
        if (!is_side(i)) continue;
        int prev = (i + m - 1) % m;
        if (is_side(prev)) continue;
        // Start of a maximal run of side edges.
        ++runs;
        int count = 0;
        for (int j = i; is_side(j % m); ++j) {
          int nub = (j + 1) % m;
          if (is_side(nub) &&
              nodes[halves[walk[j % m]].to].vertex_label != 0)
            ++count;
          if (!is_side(nub)) break;
        }
        verts += count;
        whole = whole || count >= 2;
      }
    }
    info.boundary_runs = runs;
    info.ideal_vertices = verts;
    info.contains_whole_side = whole;
    if (runs == 0)
      info.type = FaceType::a;
    else if (runs == 1 && verts == 0 && !whole)
      info.type = FaceType::b;
    else if (runs == 1 && verts == 1 && !whole)
      info.type = FaceType::c;
    else
      info.type = FaceType::violation;
    interior.push_back(info);
  }
}

}  // namespace

FillingReport fills(const IdealPolygon& P0, const CyclicFamily& family) {
  FillingReport report;
  report.connected = connectivity(P0, family);

  int k = P0.side_count();
  std::vector<ArcSegment> arcs = family_arcs(P0, family);

  // Deduplicate coincident chords (rotated families repeat symmetric words).
  std::vector<Chord> chords;
  for (const ArcSegment& a : arcs) {
    BoundaryCoordinate lo = a.e1, hi = a.e2;
    if (hi.side < lo.side || (hi.side == lo.side && hi.t < lo.t))
      std::swap(lo, hi);
    bool dup = false;
    for (const Chord& c : chords)
      if (same_boundary_coord(c.e1, lo) && same_boundary_coord(c.e2, hi))
        dup = true;
    if (dup) continue;
    Chord c;
    c.e1 = lo;
    c.e2 = hi;
    c.p1 = boundary_point(P0, lo);
    c.p2 = boundary_point(P0, hi);
    c.shape = shape_through(c.p1, c.p2);
    ChordFrame f(c.shape);
    c.s1 = f.coord(c.p1);
    c.s2 = f.coord(c.p2);
    chords.push_back(c);
  }

  Arrangement arr;

  // Provisional nodes: ideal vertices, chord endpoints, chord crossings.
  std::vector<Node> prov;
  for (int v = 1; v <= k; ++v) {
    Node n;
    n.pos = P0.vertex(v).unit();
    n.vertex_label = v;
    prov.push_back(n);
  }
  for (int c = 0; c < static_cast<int>(chords.size()); ++c) {
    for (int end = 0; end < 2; ++end) {
      const BoundaryCoordinate& bc = end ? chords[c].e2 : chords[c].e1;
      Node n;
      n.pos = to_c(end ? chords[c].p2 : chords[c].p1);
      n.on_side[bc.side] = bc.t;
      n.on_chord[c] = end ? chords[c].s2 : chords[c].s1;
      prov.push_back(n);
    }
  }
  for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(chords.size()); ++j) {
      const Chord &ci = chords[i], &cj = chords[j];
      if (same_boundary_coord(ci.e1, cj.e1) ||
          same_boundary_coord(ci.e1, cj.e2) ||
          same_boundary_coord(ci.e2, cj.e1) ||
          same_boundary_coord(ci.e2, cj.e2))
        continue;  // chords touching on the boundary never cross inside
      if (!coordinates_interlaced(ci.e1, cj.e1, ci.e2, cj.e2)) continue;
      std::optional<DiskPoint> x = shape_intersection(ci.shape, cj.shape);
      if (!x)
        throw NumericError("interlaced chords failed to intersect");
      Node n;
      n.pos = to_c(*x);
      n.on_chord[i] = ChordFrame(ci.shape).coord(*x);
      n.on_chord[j] = ChordFrame(cj.shape).coord(*x);
      for (int c : {i, j}) {
        const Chord& ch = chords[c];
        double s = n.on_chord[c];
        if (std::abs(s - ch.s1) <= kMergeTol || std::abs(s - ch.s2) <= kMergeTol)
          report.degeneracies.push_back(
              "crossing of chords " + std::to_string(i) + "," +
              std::to_string(j) + " snapped to an endpoint of chord " +
              std::to_string(c));
      }
      prov.push_back(n);
    }
  }

  // Merge nodes within the tolerance.
  int N = static_cast<int>(prov.size());
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (std::abs(prov[i].pos - prov[j].pos) <= kMergeTol)
        parent[find(i)] = find(j);
  std::map<int, int> cluster_id;
  for (int i = 0; i < N; ++i) {
    int r = find(i);
    if (!cluster_id.count(r)) {
      cluster_id[r] = static_cast<int>(arr.nodes.size());
      arr.nodes.push_back(Node{});
    }
    Node& n = arr.nodes[cluster_id[r]];
    n.pos = prov[i].pos;  // cluster diameter is below the tolerance
    if (prov[i].vertex_label) n.vertex_label = prov[i].vertex_label;
    for (auto& [s, t] : prov[i].on_side) n.on_side[s] = t;
    for (auto& [c, s] : prov[i].on_chord) n.on_chord[c] = s;
  }
  for (const Node& n : arr.nodes) {
    if (n.on_chord.size() >= 3) {
      std::string msg = "chords";
      for (auto& [c, s] : n.on_chord) msg += " " + std::to_string(c);
      report.degeneracies.push_back(msg + " concurrent at one point");
    }
    if (n.vertex_label && !n.on_chord.empty())
      report.degeneracies.push_back(
          "chord reaches ideal vertex " + std::to_string(n.vertex_label));
  }

  // Side edges: vertex i, the hits on side i ordered by t, vertex i+1.
  for (int side = 1; side <= k; ++side) {
    std::vector<std::pair<double, int>> stops;
    for (int nid = 0; nid < static_cast<int>(arr.nodes.size()); ++nid) {
      const Node& n = arr.nodes[nid];
      if (n.vertex_label == side) stops.push_back({-1e300, nid});
      if (n.vertex_label == side % k + 1) stops.push_back({1e300, nid});
      auto it = n.on_side.find(side);
      if (it != n.on_side.end()) stops.push_back({it->second, nid});
    }
    std::sort(stops.begin(), stops.end());
    for (size_t i = 0; i + 1 < stops.size(); ++i)
      arr.edges.push_back(
          {stops[i].second, stops[i + 1].second, P0.side_shape(side), true,
           side});
  }
  // Chord edges, split at the crossings.
  for (int c = 0; c < static_cast<int>(chords.size()); ++c) {
    std::vector<std::pair<double, int>> stops;
    for (int nid = 0; nid < static_cast<int>(arr.nodes.size()); ++nid) {
      auto it = arr.nodes[nid].on_chord.find(c);
      if (it != arr.nodes[nid].on_chord.end())
        stops.push_back({it->second, nid});
    }
    std::sort(stops.begin(), stops.end());
    for (size_t i = 0; i + 1 < stops.size(); ++i)
      arr.edges.push_back(
          {stops[i].second, stops[i + 1].second, chords[c].shape, false, c});
  }

  arr.trace_faces();
  report.vertices = static_cast<int>(arr.nodes.size());
  report.edges = static_cast<int>(arr.edges.size());
  report.face_count = arr.face_total;
  report.faces = arr.interior;
  bool all_typed = !report.faces.empty();
  for (const FaceInfo& f : report.faces)
    all_typed = all_typed && f.type != FaceType::violation;
  report.fills = report.connected && all_typed;
  return report;
}

}  // namespace billiards
