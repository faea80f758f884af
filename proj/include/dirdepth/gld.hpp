// The Global-Local Depth plot data: paired normalized depths, median lines,
// the median-ratio slope, quadrant counts and rank concordance.
//
// Rank agreement between the two axes signals unimodality; disagreement
// (points off the diagonal, mass outside the UR/LL quadrants) signals a
// departure from it.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "dirdepth/depth.hpp"
#include "dirdepth/errors.hpp"
#include "dirdepth/sample.hpp"
#include "dirdepth/stats.hpp"

#include "json.hpp"

namespace dirdepth {

struct NormalizedDepths {
  std::vector<double> values;
  bool degenerate = false;
};

// Min-max rescaling onto [0, 1]. A constant list is degenerate: every value
// maps to 0.5 and the flag is raised, but the result stays usable (antipodal
// data genuinely produce near-constant global depth).
inline NormalizedDepths normalize_depths(const std::vector<double>& values) {
  if (values.empty()) throw EmptyInput("normalize_depths of an empty list");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  NormalizedDepths out;
  out.values.reserve(values.size());
  if (range < 1e-12) {
    out.degenerate = true;
    out.values.assign(values.size(), 0.5);
    return out;
  }
  for (double v : values) out.values.push_back((v - lo) / range);
  return out;
}

struct GldData {
  // (global, local) normalized pairs in sample order.
  std::vector<std::array<double, 2>> points;
  double g_median = 0.0;
  double l_median = 0.0;
  double slope = 0.0;
  // UR, UL, LL, LR under the boundary-inclusive (>=, >=) rule.
  std::array<std::size_t, 4> quadrant_counts = {0, 0, 0, 0};
  double concordance = 0.0;
  double spearman_rho = 0.0;
  bool degenerate = false;
};

inline GldData build_gld(const DirectionalSample& sample,
                         const DepthConfig& config) {
  if (sample.size() < 4)
    throw EmptySample("GLD plot needs at least 4 points, got " +
                      std::to_string(sample.size()));
  const DepthProfile profile = depth_profile(sample, config);
  const NormalizedDepths g = normalize_depths(profile.global);
  const NormalizedDepths l = normalize_depths(profile.local);

  GldData gld;
  gld.degenerate = g.degenerate || l.degenerate;
  gld.points.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i)
    gld.points.push_back({g.values[i], l.values[i]});

  gld.g_median = median(g.values);
  gld.l_median = median(l.values);
  gld.slope = gld.g_median > 0.0
                  ? gld.l_median / gld.g_median
                  : std::numeric_limits<double>::infinity();

  for (const auto& [gv, lv] : gld.points) {
    const bool right = gv >= gld.g_median;
    const bool up = lv >= gld.l_median;
    if (right && up)
      ++gld.quadrant_counts[0];
    else if (!right && up)
      ++gld.quadrant_counts[1];
    else if (!right && !up)
      ++gld.quadrant_counts[2];
    else
      ++gld.quadrant_counts[3];
  }
  gld.concordance =
      static_cast<double>(gld.quadrant_counts[0] + gld.quadrant_counts[2]) /
      static_cast<double>(sample.size());
  // Normalization is monotone, so ranking the normalized axes equals ranking
  // the raw depths.
  gld.spearman_rho = spearman_rho(g.values, l.values);
  return gld;
}

// Quadrant counts as fractions of n, ordered UR, UL, LL, LR.
inline std::array<double, 4> quadrant_summary(const GldData& gld) {
  const double n = static_cast<double>(gld.points.size());
  std::array<double, 4> fractions{};
  for (std::size_t k = 0; k < 4; ++k)
    fractions[k] = n > 0.0 ? static_cast<double>(gld.quadrant_counts[k]) / n : 0.0;
  return fractions;
}

inline nlohmann::ordered_json gld_to_json(const GldData& gld) {
  nlohmann::ordered_json j;
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const auto& [g, l] : gld.points) pts.push_back({g, l});
  j["g_median"] = gld.g_median;
  j["l_median"] = gld.l_median;
  if (std::isfinite(gld.slope))
    j["slope"] = gld.slope;
  else
    j["slope"] = nullptr;
  j["quadrants"] = {{"ur", gld.quadrant_counts[0]},
                    {"ul", gld.quadrant_counts[1]},
                    {"ll", gld.quadrant_counts[2]},
                    {"lr", gld.quadrant_counts[3]}};
  j["concordance"] = gld.concordance;
  j["spearman_rho"] = gld.spearman_rho;
  j["degenerate"] = gld.degenerate;
  return j;
}

inline std::string gld_json(const GldData& gld) {
  return gld_to_json(gld).dump(2) + "\n";
}

}  // namespace dirdepth
