#pragma once

#include <vector>

#include "billiards/polygon.hpp"
#include "billiards/sequence.hpp"

namespace billiards {

// Holonomy of the unfolded word: with R_i the reflection in side i and
// T_0 = id, T_{j+1} = T_j * R_{a_j}, this returns h = T_n. For even n the
// map h is orientation-preserving and translates along the unfolded
// trajectory by its full length; for odd n it is a glide reflection whose
// square translates by twice the length.
Isometry holonomy(const IdealPolygon& P, const BilliardSequence& seq);

struct Trajectory {
  BilliardSequence sequence;
  std::vector<BoundaryCoordinate> hits;  // hit j lies on side labels()[j]
  double length = 0.0;
  Isometry word_map;  // h as above
};

// Unique closed billiard trajectory realizing the sequence. Hits are
// recovered by folding the axis of the closed-up holonomy back through the
// partial words: hit j = T_j^{-1}(axis) cap side a_j. Throws NumericError
// when the holonomy fails to be hyperbolic or a hit escapes the cusp guard.
Trajectory trajectory(const IdealPolygon& P, const BilliardSequence& seq);

// Independent length oracle: minimizes the total length of the closed
// piecewise-geodesic loop whose j-th corner is confined to side a_j,
// by cyclic coordinate descent with golden-section line searches (each
// resolved to 1e-12 in the side coordinate). Never looks at holonomies.
double length_variational(const IdealPolygon& P, const BilliardSequence& seq,
                          int max_sweeps = 100000);

// The k cyclically related trajectories of shift(seq, 0..k-1) and their
// average length. The average is invariant under shifting the input and
// under orientation-preserving isometries of the polygon.
struct CyclicFamily {
  std::vector<Trajectory> trajectories;
  double average_length = 0.0;
};

CyclicFamily cyclic_family(const IdealPolygon& P, const BilliardSequence& seq);
double average_length(const IdealPolygon& P, const BilliardSequence& seq);

}  // namespace billiards
