// Seedable random source with fully specified output streams.
//
// The engine is std::mt19937_64 (its single-value seeding procedure is fixed
// by the standard), and every variate transform below is coded here rather
// than taken from std::*_distribution, whose algorithms are
// implementation-defined. Two runs with the same seed therefore produce the
// same stream on any conforming platform.
//
// Stream assignment rule: each sampling operation constructs exactly one Rng
// from its caller-supplied seed and consumes it sequentially. Callers that
// need several independent streams derive per-stream seeds with mix_seed().
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "dirdepth/errors.hpp"

namespace dirdepth {

// SplitMix64 finalizer; decorrelates consecutive or otherwise related seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Strictly inside (0, 1): midpoints of the 2^53 dyadic cells.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; one variate per call, two uniforms consumed.
  double gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Marsaglia-Tsang squeeze method; shape < 1 handled by the power boost
  // Gamma(a) = Gamma(a+1) * U^(1/a). Unit scale.
  double gamma(double shape) {
    if (shape <= 0.0) throw InvalidArgument("gamma shape must be positive");
    if (shape < 1.0) {
      double u = uniform01();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x;
      double v;
      do {
        x = gaussian();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform01();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dirdepth
