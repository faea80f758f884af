// von Mises-Fisher simulation in arbitrary dimension: single distributions,
// finite mixtures, the uniform law, and density evaluation.
//
// Sampling uses the standard rejection scheme: the cosine w of the angle to
// the mean direction is drawn from its marginal through a Beta envelope, a
// uniform tangent direction v orthogonal to mu is drawn separately, and the
// point is w mu + sqrt(1 - w^2) v.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dirdepth/bessel.hpp"
#include "dirdepth/errors.hpp"
#include "dirdepth/rng.hpp"
#include "dirdepth/sample.hpp"
#include "dirdepth/unit_vector.hpp"

namespace dirdepth {

struct VmfParams {
  VmfParams(UnitVector mean_direction, double concentration)
      : mu(std::move(mean_direction)), kappa(concentration) {
    if (!(kappa >= 0.0))
      throw InvalidArgument("vMF concentration must be >= 0, got " +
                            std::to_string(kappa));
  }

  UnitVector mu;
  double kappa;  // kappa = 0 is uniform on the sphere
};

struct MixtureParams {
  MixtureParams(std::vector<VmfParams> comps, std::vector<double> wts)
      : components(std::move(comps)), weights(std::move(wts)) {
    if (components.empty())
      throw InvalidArgument("mixture needs at least one component");
    if (weights.size() != components.size())
      throw InvalidArgument("mixture has " +
                            std::to_string(components.size()) +
                            " components but " + std::to_string(weights.size()) +
                            " weights");
    const int q = components.front().mu.dim();
    for (const VmfParams& c : components)
      if (c.mu.dim() != q)
        throw InconsistentDimension("mixture components mix dimensions");
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw InvalidArgument("mixture weights must be >= 0");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw InvalidArgument("mixture weights sum to " + std::to_string(total) +
                            ", not 1");
  }

  int dim() const { return components.front().mu.dim(); }

  std::vector<VmfParams> components;
  std::vector<double> weights;
};

namespace detail {

inline std::vector<double> gaussian_vector(Rng& rng, int q) {
  std::vector<double> v(static_cast<std::size_t>(q));
  for (double& c : v) c = rng.gaussian();
  return v;
}

inline UnitVector uniform_draw(Rng& rng, int q) {
  for (;;) {
    std::vector<double> v = gaussian_vector(rng, q);
    double n = 0.0;
    for (double c : v) n += c * c;
    if (n > 1e-24) return normalize(v);
  }
}

// Cosine of the angle to mu under vMF(mu, kappa) on S^(q-1), drawn by the
// Beta-envelope rejection sampler. The envelope constant is
// b = (-2 kappa + sqrt(4 kappa^2 + (q-1)^2)) / (q-1), computed here in the
// rationalized form (q-1) / (2 kappa + sqrt(...)) to avoid cancellation.
inline double vmf_cosine_draw(Rng& rng, int q, double kappa) {
  const double qm1 = q - 1.0;
  const double b = qm1 / (2.0 * kappa + std::sqrt(4.0 * kappa * kappa + qm1 * qm1));
  const double x0 = (1.0 - b) / (1.0 + b);
  const double c = kappa * x0 + qm1 * std::log(1.0 - x0 * x0);
  const double a = 0.5 * qm1;
  for (;;) {
    const double z = rng.beta(a, a);
    const double w = (1.0 - (1.0 + b) * z) / (1.0 - (1.0 - b) * z);
    const double u = rng.uniform01();
    if (kappa * w + qm1 * std::log(1.0 - x0 * w) - c >= std::log(u)) return w;
  }
}

// Uniform direction in the tangent space at mu.
inline std::vector<double> tangent_draw(Rng& rng, const UnitVector& mu) {
  const int q = mu.dim();
  for (;;) {
    std::vector<double> v = gaussian_vector(rng, q);
    double s = 0.0;
    for (int i = 0; i < q; ++i) s += v[static_cast<std::size_t>(i)] * mu[i];
    double n = 0.0;
    for (int i = 0; i < q; ++i) {
      v[static_cast<std::size_t>(i)] -= s * mu[i];
      n += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    }
    n = std::sqrt(n);
    if (n > 1e-12) {
      for (double& c : v) c /= n;
      return v;
    }
  }
}

inline UnitVector vmf_draw(Rng& rng, const UnitVector& mu, double kappa) {
  const int q = mu.dim();
  if (kappa == 0.0) return uniform_draw(rng, q);
  const double w = vmf_cosine_draw(rng, q, kappa);
  const std::vector<double> v = tangent_draw(rng, mu);
  const double t = std::sqrt(std::max(0.0, 1.0 - w * w));
  std::vector<double> x(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    x[static_cast<std::size_t>(i)] = w * mu[i] + t * v[static_cast<std::size_t>(i)];
  return normalize(x);
}

}  // namespace detail

inline DirectionalSample sample_uniform(int q, std::size_t n,
                                        std::uint64_t seed) {
  if (q < 2) throw DimensionTooSmall("sample_uniform needs q >= 2");
  if (n < 1) throw InvalidArgument("sample_uniform needs n >= 1");
  Rng rng(seed);
  std::vector<UnitVector> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    points.push_back(detail::uniform_draw(rng, q));
  return DirectionalSample(std::move(points));
}

inline DirectionalSample sample_vmf(const VmfParams& params, std::size_t n,
                                    std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_vmf needs n >= 1");
  if (params.kappa == 0.0) return sample_uniform(params.mu.dim(), n, seed);
  Rng rng(seed);
  std::vector<UnitVector> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    points.push_back(detail::vmf_draw(rng, params.mu, params.kappa));
  return DirectionalSample(std::move(points));
}

// One component index by weight, then one vMF draw from it, both off a single
// sequential stream; a degenerate weight vector therefore reproduces the
// lone component's law but not sample_vmf's exact stream.
inline DirectionalSample sample_mixture(const MixtureParams& params,
                                        std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_mixture needs n >= 1");
  Rng rng(seed);
  std::vector<UnitVector> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    double acc = 0.0;
    std::size_t idx = params.components.size() - 1;
    for (std::size_t k = 0; k < params.weights.size(); ++k) {
      acc += params.weights[k];
      if (u <= acc) {
        idx = k;
        break;
      }
    }
    const VmfParams& comp = params.components[idx];
    points.push_back(comp.kappa == 0.0
                         ? detail::uniform_draw(rng, comp.mu.dim())
                         : detail::vmf_draw(rng, comp.mu, comp.kappa));
  }
  return DirectionalSample(std::move(points));
}

// Density of the uniform law on S^(q-1), the kappa = 0 case the vMF density
// below deliberately refuses.
inline double uniform_density(int q) { return 1.0 / sphere_surface_area(q); }

inline double vmf_log_density(const UnitVector& x, const VmfParams& params) {
  if (x.dim() != params.mu.dim())
    throw DimensionMismatch("density point dimension " +
                            std::to_string(x.dim()) +
                            " does not match mu dimension " +
                            std::to_string(params.mu.dim()));
  if (!(params.kappa > 0.0))
    throw KappaNotPositive(
        "vmf_density needs kappa > 0; use uniform_density for kappa = 0");
  const double q = params.mu.dim();
  const double nu = 0.5 * q - 1.0;
  // log C_q(kappa) with C_q(kappa) = kappa^(q/2-1) / ((2 pi)^(q/2) I_nu(kappa))
  const double log_c = nu * std::log(params.kappa) -
                       0.5 * q * std::log(2.0 * kPi) -
                       log_bessel_i(nu, params.kappa);
  return log_c + params.kappa * x.dot(params.mu);
}

inline double vmf_density(const UnitVector& x, const VmfParams& params) {
  return std::exp(vmf_log_density(x, params));
}

}  // namespace dirdepth
