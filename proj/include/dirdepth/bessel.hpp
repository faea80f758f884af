// Modified Bessel functions of the first kind, in the forms the sampler
// oracles and the vMF normalizer need: log I_nu(x) and the ratio
// I_{nu+1}(x) / I_nu(x).
#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "dirdepth/errors.hpp"
#include "dirdepth/unit_vector.hpp"

namespace dirdepth {

// log I_nu(x) for nu >= 0, x >= 0. Power series summed relative to its first
// term, so small x cannot underflow; large x switches to the asymptotic
// expansion before e^x leaves double range.
inline double log_bessel_i(double nu, double x) {
  if (nu < 0.0 || x < 0.0)
    throw InvalidArgument("log_bessel_i needs nu >= 0 and x >= 0");
  if (x == 0.0) {
    if (nu == 0.0) return 0.0;  // I_0(0) = 1
    return -std::numeric_limits<double>::infinity();
  }
  if (x > 500.0) {
    // I_nu(x) ~ e^x / sqrt(2 pi x) * (1 - (4 nu^2 - 1)/(8x) + ...)
    const double mu = 4.0 * nu * nu;
    const double c1 = -(mu - 1.0) / (8.0 * x);
    const double c2 = (mu - 1.0) * (mu - 9.0) / (128.0 * x * x);
    return x - 0.5 * std::log(2.0 * kPi * x) + std::log1p(c1 + c2);
  }
  // I_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k t_k,
  // t_0 = 1, t_{k+1} = t_k * (x/2)^2 / ((k+1)(k+1+nu)).
  const double h = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 2000; ++k) {
    term *= h / (k * (k + nu));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) + std::log(sum);
}

inline double bessel_i(double nu, double x) {
  return std::exp(log_bessel_i(nu, x));
}

// I_{nu+1}(x) / I_nu(x) via the continued fraction from the three-term
// recurrence, evaluated by backward truncation. Stable for all x >= 0 and
// free of the overflow the direct quotient would hit.
inline double bessel_i_ratio(double nu, double x) {
  if (x == 0.0) return 0.0;
  const int depth = 60 + static_cast<int>(x);
  double r = 0.0;
  for (int k = depth; k >= 1; --k) r = 1.0 / (2.0 * (nu + k) / x + r);
  return r;
}

// Mean resultant length of vMF(mu, kappa) on S^(q-1):
// A_q(kappa) = I_{q/2}(kappa) / I_{q/2-1}(kappa). Zero at kappa = 0 and
// strictly increasing towards 1.
inline double bessel_ratio(int q, double kappa) {
  if (q < 2) throw DimensionTooSmall("bessel_ratio needs q >= 2");
  if (kappa < 0.0) throw InvalidArgument("bessel_ratio needs kappa >= 0");
  return bessel_i_ratio(0.5 * q - 1.0, kappa);
}

// Surface area of S^(q-1): 2 pi^(q/2) / Gamma(q/2).
inline double sphere_surface_area(int q) {
  if (q < 2) throw DimensionTooSmall("sphere_surface_area needs q >= 2");
  return 2.0 * std::pow(kPi, 0.5 * q) / std::tgamma(0.5 * q);
}

}  // namespace dirdepth
