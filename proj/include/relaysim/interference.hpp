#ifndef RELAYSIM_INTERFERENCE_HPP
#define RELAYSIM_INTERFERENCE_HPP

#include <Eigen/Dense>

#include "relaysim/fading.hpp"

namespace relaysim {

// Cumulants kappa_1..kappa_n of a power random variable, linear watts^n.
struct CumulantVector {
  Eigen::VectorXd kappa;  // kappa(i) holds kappa_{i+1}

  double mean() const { return kappa(0); }
  double variance() const { return kappa(1); }
  int order() const { return static_cast<int>(kappa.size()); }
};

// Annulus [r_min, r_max] around the tagged receiver populated by a
// homogeneous PPP of transmitters (or, with lambda ignored, hosting a single
// uniformly placed transmitter).
struct AnnulusField {
  double lambda = 0.0;     // nodes/m^2
  double r_min = 1.0;      // m
  double r_max = 2.0;      // m
  double alpha = 3.0;      // path-loss exponent, > 2
  double tx_power = 1.0;   // W
  CompositeFadingParams fading;
};

// Residual self-interference of a full-duplex transceiver: the leakage
// (delta * p00) faded by a near-deterministic channel (default m = 16,
// the Ricean large-K equivalent).
struct SelfInterference {
  double tx_power = 1.0;        // W, p00
  double attenuation_dB = 100.0;
  CompositeFadingParams fading{16.0, 0.0, 0.0};

  double delta_linear() const { return db_to_linear(-attenuation_dB); }
};

// Raw moments E[Y^n], n = 1..n_max, of Y = p R^-alpha X for a single
// transmitter uniform in the annulus, X the lognormal-approximated fading:
//   E[Y^n] = p^n * 2 (r_min^{2-na} - r_max^{2-na}) / ((na-2)(r_max^2-r_min^2)) * E[X^n]
Eigen::VectorXd single_tx_moments(const AnnulusField& field, int n_max);

// Cumulants of the same Y, via the raw moments above.
CumulantVector single_tx_cumulants(const AnnulusField& field, int n_max);

// Standard moment -> cumulant recursion
//   kappa_n = mu'_n - sum_{k=1}^{n-1} C(n-1, k-1) kappa_k mu'_{n-k}
CumulantVector moments_to_cumulants(const Eigen::VectorXd& raw_moments);

// Aggregate co-channel interference of the whole Poisson field:
//   kappa_n = 2 pi lambda p^n (r_min^{2-an} - r_max^{2-an}) / (n a - 2) * E[X^n]
CumulantVector ppp_field_cumulants(const AnnulusField& field, int n_max);

// Cumulants of the single RV (delta * p00) * x00.
CumulantVector self_interference_cumulants(const SelfInterference& si, int n_max);

// Elementwise sum; cumulants of independent summands add.
CumulantVector add_cumulants(const CumulantVector& a, const CumulantVector& b);

// Lognormal moment matching:
//   mu_ln = ln(k1^2 / sqrt(k1^2 + k2)),  sigma_ln^2 = ln(1 + k2 / k1^2)
// Requires kappa_1 > 0 (interference-free corners are bypassed upstream).
LognormalParams cumulants_to_lognormal(const CumulantVector& k);

} // namespace relaysim

#endif
