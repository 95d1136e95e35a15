#pragma once

#include <random>
#include <vector>

#include "billiards/geometry.hpp"

namespace testutil {

using billiards::Isometry;

// Orientation-preserving isometry drawn as rotation * translation * rotation,
// which covers the whole group.
inline Isometry random_isometry(std::mt19937_64& rng, double max_shift = 1.5) {
  std::uniform_real_distribution<double> ang(0.0, billiards::kTau);
  std::uniform_real_distribution<double> len(0.0, max_shift);
  Isometry r1 = Isometry::disk_rotation(ang(rng));
  Isometry r2 = Isometry::disk_rotation(ang(rng));
  Isometry shift = Isometry::scaling(std::exp(len(rng)));
  return r1 * shift * r2;
}

inline billiards::DiskPoint random_disk_point(std::mt19937_64& rng,
                                              double max_radius = 0.9) {
  std::uniform_real_distribution<double> ang(0.0, billiards::kTau);
  std::uniform_real_distribution<double> rad(0.0, max_radius);
  double r = rad(rng), t = ang(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

inline billiards::IdealPoint random_ideal_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, billiards::kTau);
  return billiards::IdealPoint(ang(rng));
}

}  // namespace testutil
