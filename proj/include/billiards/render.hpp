#pragma once

#include <string>

#include "billiards/polygon.hpp"
#include "billiards/trajectory.hpp"

namespace billiards {

// Poincare disk figure: the boundary circle, the polygon sides as
// circular arcs, every family trajectory as a sampled polyline with its
// own stroke class, and the ideal vertices marked. Output is valid XML
// and byte-deterministic for equal inputs.
std::string render_svg(const IdealPolygon& P, const CyclicFamily& family);

}  // namespace billiards
