// Points on the unit hypersphere S^(q-1) and constructors for them.
#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dirdepth/errors.hpp"

namespace dirdepth {

inline constexpr double kPi = 3.14159265358979323846;

// Construction tolerance: inputs whose norm is within this of 1 are silently
// renormalized; anything farther off is rejected.
inline constexpr double kUnitNormTol = 1e-12;

class UnitVector {
 public:
  explicit UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
      throw DimensionTooSmall("unit vector needs dimension >= 2, got " +
                              std::to_string(coords_.size()));
    const double n = norm(coords_);
    if (std::abs(n - 1.0) > kUnitNormTol)
      throw NotUnitNorm("coordinates have norm " + std::to_string(n) +
                        ", not 1 within 1e-12");
    for (double& c : coords_) c /= n;
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  double dot(const UnitVector& other) const {
    if (other.dim() != dim())
      throw DimensionMismatch("dot of dimensions " + std::to_string(dim()) +
                              " and " + std::to_string(other.dim()));
    return std::inner_product(coords_.begin(), coords_.end(),
                              other.coords_.begin(), 0.0);
  }

 private:
  static double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
  }

  std::vector<double> coords_;
};

// Scales an arbitrary vector onto the sphere.
inline UnitVector normalize(std::span<const double> raw) {
  if (raw.size() < 2)
    throw DimensionTooSmall("normalize needs dimension >= 2, got " +
                            std::to_string(raw.size()));
  double s = 0.0;
  for (double c : raw) s += c * c;
  const double n = std::sqrt(s);
  if (n <= 1e-12) throw ZeroNorm("cannot normalize a vector of norm <= 1e-12");
  std::vector<double> coords(raw.begin(), raw.end());
  for (double& c : coords) c /= n;
  return UnitVector(std::move(coords));
}

inline UnitVector normalize(const std::vector<double>& raw) {
  return normalize(std::span<const double>(raw));
}

// Circular case: the point at angle theta on S^1.
inline UnitVector from_angle(double theta_rad) {
  return UnitVector({std::cos(theta_rad), std::sin(theta_rad)});
}

// Geographic convention: latitude is elevation from the equator, both
// arguments in degrees. Longitude is taken mod 360 implicitly.
inline UnitVector from_latlon(double lat_deg, double lon_deg) {
  if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
    throw LatitudeOutOfRange("latitude " + std::to_string(lat_deg) +
                             " outside [-90, 90]");
  const double phi = lat_deg * kPi / 180.0;
  const double lam = lon_deg * kPi / 180.0;
  return normalize(std::vector<double>{std::cos(phi) * std::cos(lam),
                                       std::cos(phi) * std::sin(lam),
                                       std::sin(phi)});
}

}  // namespace dirdepth
