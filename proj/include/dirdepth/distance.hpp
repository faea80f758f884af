// The three bounded spherical distances and their suprema.
//
// All three are functions of the inner product t = x'y:
//   arc    arccos(t),        range [0, pi]
//   cosine 1 - t,            range [0, 2]
//   chord  sqrt(2 (1 - t)),  range [0, 2]
#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "dirdepth/errors.hpp"
#include "dirdepth/unit_vector.hpp"

namespace dirdepth {

enum class DistanceKind { Arc, Cosine, Chord };

inline double sup_distance(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::Arc:
      return kPi;
    case DistanceKind::Cosine:
    case DistanceKind::Chord:
      return 2.0;
  }
  throw InvalidArgument("unknown distance kind");
}

inline double distance(DistanceKind kind, const UnitVector& x,
                       const UnitVector& y) {
  // Dot products of unit vectors can drift past [-1, 1] by ~1e-16; clamp so
  // arccos/sqrt stay finite.
  const double t = std::clamp(x.dot(y), -1.0, 1.0);
  switch (kind) {
    case DistanceKind::Arc:
      return std::acos(t);
    case DistanceKind::Cosine:
      return 1.0 - t;
    case DistanceKind::Chord:
      return std::sqrt(2.0 * std::max(0.0, 1.0 - t));
  }
  throw InvalidArgument("unknown distance kind");
}

// The locality radius delta whose spherical cap has the given angular radius:
// points y with angle(x, y) <= angle_rad are exactly those with
// distance(kind, x, y) <= cap_radius_from_angle(kind, angle_rad).
inline double cap_radius_from_angle(DistanceKind kind, double angle_rad) {
  if (!(angle_rad > 0.0 && angle_rad <= kPi))
    throw AngleOutOfRange("cap angle " + std::to_string(angle_rad) +
                          " outside (0, pi]");
  switch (kind) {
    case DistanceKind::Arc:
      return angle_rad;
    case DistanceKind::Cosine:
      return 1.0 - std::cos(angle_rad);
    case DistanceKind::Chord:
      return std::sqrt(2.0 * (1.0 - std::cos(angle_rad)));
  }
  throw InvalidArgument("unknown distance kind");
}

inline std::string to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::Arc:
      return "arc";
    case DistanceKind::Cosine:
      return "cosine";
    case DistanceKind::Chord:
      return "chord";
  }
  return "?";
}

inline DistanceKind distance_kind_from_string(const std::string& name) {
  if (name == "arc") return DistanceKind::Arc;
  if (name == "cosine" || name == "cos") return DistanceKind::Cosine;
  if (name == "chord") return DistanceKind::Chord;
  throw InvalidArgument("unknown distance kind '" + name +
                        "' (expected arc, cosine or chord)");
}

}  // namespace dirdepth
