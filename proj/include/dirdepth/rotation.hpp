// Orthogonal maps of S^(q-1), used by the invariance checks.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dirdepth/errors.hpp"
#include "dirdepth/rng.hpp"
#include "dirdepth/sample.hpp"
#include "dirdepth/unit_vector.hpp"

namespace dirdepth {

class RotationMatrix {
 public:
  // entries is row-major q x q; O'O must equal I within 1e-10 entrywise.
  RotationMatrix(int q, std::vector<double> entries)
      : q_(q), entries_(std::move(entries)) {
    if (q < 2) throw DimensionTooSmall("rotation needs dimension >= 2");
    if (entries_.size() != static_cast<std::size_t>(q) * q)
      throw DimensionMismatch("rotation entries size " +
                              std::to_string(entries_.size()) +
                              " does not match dimension " + std::to_string(q));
    for (int i = 0; i < q_; ++i) {
      for (int j = 0; j < q_; ++j) {
        double s = 0.0;
        for (int k = 0; k < q_; ++k) s += at(k, i) * at(k, j);
        const double expected = (i == j) ? 1.0 : 0.0;
        if (std::abs(s - expected) > 1e-10)
          throw InvalidArgument("matrix is not orthogonal: (O'O)[" +
                                std::to_string(i) + "][" + std::to_string(j) +
                                "] = " + std::to_string(s));
      }
    }
  }

  static RotationMatrix identity(int q) {
    std::vector<double> e(static_cast<std::size_t>(q) * q, 0.0);
    for (int i = 0; i < q; ++i) e[static_cast<std::size_t>(i) * q + i] = 1.0;
    return RotationMatrix(q, std::move(e));
  }

  int dim() const { return q_; }
  double at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * q_ + j];
  }

 private:
  int q_;
  std::vector<double> entries_;
};

inline UnitVector apply_rotation(const RotationMatrix& o, const UnitVector& x) {
  if (o.dim() != x.dim())
    throw DimensionMismatch("rotation dimension " + std::to_string(o.dim()) +
                            " does not match point dimension " +
                            std::to_string(x.dim()));
  std::vector<double> y(static_cast<std::size_t>(o.dim()), 0.0);
  for (int i = 0; i < o.dim(); ++i) {
    double s = 0.0;
    for (int j = 0; j < o.dim(); ++j) s += o.at(i, j) * x[j];
    y[static_cast<std::size_t>(i)] = s;
  }
  // Renormalize to absorb rounding from the matrix product.
  return normalize(y);
}

inline DirectionalSample apply_rotation(const RotationMatrix& o,
                                        const DirectionalSample& sample) {
  std::vector<UnitVector> rotated;
  rotated.reserve(sample.size());
  for (const UnitVector& p : sample) rotated.push_back(apply_rotation(o, p));
  return DirectionalSample(std::move(rotated));
}

// Haar-distributed rotation: Gram-Schmidt of a q x q standard Gaussian
// matrix. The R factor's diagonal is positive by construction, which fixes
// the factorization uniquely. Deterministic given seed.
inline RotationMatrix random_rotation(int q, std::uint64_t seed) {
  if (q < 2) throw DimensionTooSmall("rotation needs dimension >= 2");
  Rng rng(seed);
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(q),
                                        std::vector<double>(q));
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < q; ++i) cols[j][i] = rng.gaussian();

  auto project_out = [q](std::vector<double>& v,
                         const std::vector<double>& u) {
    double s = 0.0;
    for (int i = 0; i < q; ++i) s += v[i] * u[i];
    for (int i = 0; i < q; ++i) v[i] -= s * u[i];
  };
  for (int j = 0; j < q; ++j) {
    // Two Gram-Schmidt passes keep the orthogonality loss near machine eps.
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < j; ++k) project_out(cols[j], cols[k]);
    double n = 0.0;
    for (int i = 0; i < q; ++i) n += cols[j][i] * cols[j][i];
    n = std::sqrt(n);
    if (n < 1e-12)
      throw InvalidArgument("degenerate Gaussian draw in random_rotation");
    for (int i = 0; i < q; ++i) cols[j][i] /= n;
  }

  std::vector<double> entries(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      entries[static_cast<std::size_t>(i) * q + j] = cols[j][i];
  return RotationMatrix(q, std::move(entries));
}

}  // namespace dirdepth
