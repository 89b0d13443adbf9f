#ifndef RELAYSIM_FADING_HPP
#define RELAYSIM_FADING_HPP

#include <limits>
#include <random>

#include "relaysim/decibel.hpp"

namespace relaysim {

// Composite Nakagami-m x lognormal fading. The Nakagami squared envelope is
// normalized to unit mean, so transmit power carries all scale.
struct CompositeFadingParams {
  double m = 1.0;               // Nakagami shape, >= 0.5
  double mu_omega_dB = 0.0;     // shadowing mean (dB)
  double sigma_omega_dB = 0.0;  // shadowing std (dB)

  // Degenerate channel x == 1 (m -> inf limit, no shadowing).
  static CompositeFadingParams unfaded() {
    return {std::numeric_limits<double>::infinity(), 0.0, 0.0};
  }
};

// A power quantity whose dB value is Normal(mu_dB, sigma_dB^2).
struct LognormalParams {
  double mu_dB = 0.0;
  double sigma_dB = 0.0;

  double mu_ln() const { return mu_dB / kXi; }
  double sigma_ln() const { return sigma_dB / kXi; }
};

// Euler psi function. Exact harmonic sum for integer m, otherwise recurrence
// shift plus asymptotic series truncated below 1e-14. Throws for m <= 0.
double digamma(double m);

// Hurwitz zeta(2, m), same evaluation strategy. Throws for m <= 0.
double hurwitz_zeta2(double m);

// Single-lognormal approximation of the composite channel:
//   mu_dB    = xi * (psi(m) - ln m) + mu_omega_dB
//   sigma_dB = sqrt(xi^2 * zeta(2, m) + sigma_omega_dB^2)
LognormalParams composite_to_lognormal(const CompositeFadingParams& f);

// n-th raw moment E[X^n] = exp(n mu_ln + n^2 sigma_ln^2 / 2), n >= 1.
double lognormal_moment(const LognormalParams& p, int n);

// One draw of the true composite squared envelope: Gamma(m, mean 1) times a
// lognormal shadowing draw. Monte Carlo stays independent of the lognormal
// approximation above.
double sample_composite(const CompositeFadingParams& f, std::mt19937_64& rng);

} // namespace relaysim

#endif
