#pragma once

#include <optional>
#include <string>
#include <vector>

#include "billiards/trajectory.hpp"

namespace billiards {

// Geodesic chord of the polygon: a closed arc with both endpoints on the
// boundary and interior inside the open polygon.
struct ArcSegment {
  BoundaryCoordinate e1, e2;
  int owner = 0;  // index of the trajectory the arc belongs to
  DiskPoint p1, p2;
  GeodesicShape chord;
};

// Endpoints on one side would put the arc on the boundary itself; both
// degenerate inputs throw ValidationError.
ArcSegment make_arc(const IdealPolygon& P, BoundaryCoordinate e1,
                    BoundaryCoordinate e2, int owner);

// All arcs of all trajectories, consecutive hits joined cyclically.
std::vector<ArcSegment> family_arcs(const IdealPolygon& P,
                                    const CyclicFamily& family);

// True when the endpoint pairs of the two arcs separate each other in the
// cyclic order of the polygon boundary. Arcs sharing an endpoint (within
// 1e-9 in the boundary coordinate) count as adjacent, never interlaced.
// Throws ValidationError when an arc is degenerate.
bool interlace(const ArcSegment& s1, const ArcSegment& s2);

// Interior crossing point; present iff interlace holds. The point is
// checked to lie between both endpoint pairs on the supporting geodesics.
std::optional<DiskPoint> intersects(const ArcSegment& s1, const ArcSegment& s2);

// Arcwise connectivity of the union of the family's trajectories:
// union-find over all arcs, merged on shared endpoints and on interlacing
// pairs. An empty family is not connected.
bool connectivity(const IdealPolygon& P, const CyclicFamily& family);

// True when the trajectory meets two sides that are not cyclically
// adjacent mod k.
bool non_adjacent_sides(const Trajectory& t);

enum class FaceType { a, b, c, violation };

// One complementary face of the trajectory union inside the polygon:
//   (a) bounded entirely by trajectory arcs;
//   (b) one maximal boundary run lying inside a single side;
//   (c) one maximal boundary run through exactly one ideal vertex.
struct FaceInfo {
  FaceType type = FaceType::violation;
  int boundary_runs = 0;
  bool contains_whole_side = false;
  int ideal_vertices = 0;  // ideal vertices interior to boundary runs
  int edge_count = 0;
};

struct FillingReport {
  bool connected = false;
  std::vector<FaceInfo> faces;  // interior faces of the arrangement
  bool fills = false;
  // Arrangement counts including the outer face; V - E + F = 2.
  int vertices = 0;
  int edges = 0;
  int face_count = 0;
  // Precision events: concurrent chord triples, endpoint snaps.
  std::vector<std::string> degeneracies;
};

// Planar arrangement of the family's chords together with the polygon
// sides; classifies every complementary face and combines the verdict
// with connectivity.
FillingReport fills(const IdealPolygon& P0, const CyclicFamily& family);

}  // namespace billiards
