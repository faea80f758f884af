// Global and local distance-based depths for directional data.
//
// Global depth of x:   d_sup - mean distance from x to the sample.
// Local depth of x:    d_sup - mean of the distances that fall within the
//                      locality radius delta (a spherical cap around x).
//
// Both are plug-in estimators over a finite sample; no population integrals
// are computed anywhere in this module.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dirdepth/distance.hpp"
#include "dirdepth/errors.hpp"
#include "dirdepth/sample.hpp"
#include "dirdepth/unit_vector.hpp"

namespace dirdepth {

struct DepthConfig {
  DistanceKind kind = DistanceKind::Cosine;
  std::optional<double> delta;
  // Whether a sample point being evaluated against its own sample counts
  // itself (plug-in) or is left out. Self-distance 0 inflates local depth
  // for tiny neighborhoods, hence the opt-out.
  bool include_self = true;
};

struct DepthProfile {
  std::vector<double> global;
  std::vector<double> local;
  DepthConfig config;
};

namespace detail {

inline void check_dims(const UnitVector& x, const DirectionalSample& sample) {
  if (x.dim() != sample.dim())
    throw DimensionMismatch("point dimension " + std::to_string(x.dim()) +
                            " does not match sample dimension " +
                            std::to_string(sample.dim()));
}

inline void check_delta(DistanceKind kind, double delta) {
  if (!(delta > 0.0 && delta < sup_distance(kind)))
    throw DeltaOutOfRange("delta " + std::to_string(delta) +
                          " outside (0, " + std::to_string(sup_distance(kind)) +
                          ") for " + to_string(kind) + " distance");
}

// Mean distance from x to the sample, skipping index skip (or none).
inline double mean_distance(const UnitVector& x,
                            const DirectionalSample& sample, DistanceKind kind,
                            std::ptrdiff_t skip = -1) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) == skip) continue;
    sum += distance(kind, x, sample[i]);
    ++count;
  }
  if (count == 0) throw EmptySample("no reference points left");
  return sum / static_cast<double>(count);
}

// Mean of the distances <= delta (the condition is closed: ties at the
// boundary are in). Empty neighborhood reported through the count.
inline std::pair<double, std::size_t> conditional_mean_distance(
    const UnitVector& x, const DirectionalSample& sample, DistanceKind kind,
    double delta, std::ptrdiff_t skip = -1) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) == skip) continue;
    const double d = distance(kind, x, sample[i]);
    if (d <= delta) {
      sum += d;
      ++count;
    }
  }
  return {count ? sum / static_cast<double>(count) : 0.0, count};
}

}  // namespace detail

inline double global_depth(const UnitVector& x,
                           const DirectionalSample& sample,
                           DistanceKind kind) {
  detail::check_dims(x, sample);
  return sup_distance(kind) - detail::mean_distance(x, sample, kind);
}

// Empty neighborhoods return d_sup, the delta -> 0+ limit of the local depth,
// so batch evaluation stays total.
inline double local_depth(const UnitVector& x, const DirectionalSample& sample,
                          DistanceKind kind, double delta) {
  detail::check_dims(x, sample);
  detail::check_delta(kind, delta);
  const auto [mean, count] =
      detail::conditional_mean_distance(x, sample, kind, delta);
  if (count == 0) return sup_distance(kind);
  return sup_distance(kind) - mean;
}

// The gap term of the global = local - gap decomposition: unconditional mean
// distance minus the delta-conditional one. Undefined (and an error) when the
// neighborhood is empty.
inline double expectation_gap(const UnitVector& x,
                              const DirectionalSample& sample,
                              DistanceKind kind, double delta) {
  detail::check_dims(x, sample);
  detail::check_delta(kind, delta);
  const auto [cond_mean, count] =
      detail::conditional_mean_distance(x, sample, kind, delta);
  if (count == 0)
    throw EmptyNeighborhood("no sample distance within delta = " +
                            std::to_string(delta));
  return detail::mean_distance(x, sample, kind) - cond_mean;
}

// Global and local depth of every sample point against its own sample, in
// sample order. With include_self = false each point is scored against the
// other n-1 points.
inline DepthProfile depth_profile(const DirectionalSample& sample,
                                  const DepthConfig& config) {
  if (!config.delta)
    throw DeltaOutOfRange("depth_profile requires a locality radius delta");
  detail::check_delta(config.kind, *config.delta);
  if (sample.size() < 2)
    throw EmptySample("depth_profile needs at least 2 points, got " +
                      std::to_string(sample.size()));

  DepthProfile profile;
  profile.config = config;
  profile.global.reserve(sample.size());
  profile.local.reserve(sample.size());
  const double sup = sup_distance(config.kind);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const std::ptrdiff_t skip =
        config.include_self ? -1 : static_cast<std::ptrdiff_t>(i);
    profile.global.push_back(
        sup - detail::mean_distance(sample[i], sample, config.kind, skip));
    const auto [mean, count] = detail::conditional_mean_distance(
        sample[i], sample, config.kind, *config.delta, skip);
    profile.local.push_back(count ? sup - mean : sup);
  }
  return profile;
}

struct CurvePoint {
  double angle;
  double depth;
};

// Depth evaluated at grid_size equispaced angles on the circle; global when
// delta is absent, local otherwise. Circular samples only.
inline std::vector<CurvePoint> depth_curve(const DirectionalSample& sample,
                                           DistanceKind kind,
                                           std::optional<double> delta,
                                           int grid_size) {
  if (sample.dim() != 2)
    throw NotCircular("depth_curve needs a circular sample (q = 2), got q = " +
                      std::to_string(sample.dim()));
  if (grid_size < 8)
    throw InvalidArgument("grid size must be at least 8, got " +
                          std::to_string(grid_size));
  if (delta) detail::check_delta(kind, *delta);

  std::vector<CurvePoint> curve;
  curve.reserve(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) {
    const double angle = 2.0 * kPi * k / grid_size;
    const UnitVector x = from_angle(angle);
    const double depth = delta ? local_depth(x, sample, kind, *delta)
                               : global_depth(x, sample, kind);
    curve.push_back({angle, depth});
  }
  return curve;
}

}  // namespace dirdepth
