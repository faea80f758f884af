// An ordered collection of unit vectors of common dimension: the empirical
// distribution every depth is computed against.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dirdepth/errors.hpp"
#include "dirdepth/unit_vector.hpp"

namespace dirdepth {

class DirectionalSample {
 public:
  explicit DirectionalSample(std::vector<UnitVector> points)
      : points_(std::move(points)) {
    if (points_.empty()) throw EmptySample("sample needs at least one point");
    const int q = points_.front().dim();
    for (const UnitVector& p : points_)
      if (p.dim() != q)
        throw InconsistentDimension(
            "sample mixes dimensions " + std::to_string(q) + " and " +
            std::to_string(p.dim()));
  }

  int dim() const { return points_.front().dim(); }
  std::size_t size() const { return points_.size(); }
  const UnitVector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<UnitVector>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<UnitVector> points_;
};

}  // namespace dirdepth
