#ifndef RELAYSIM_LINK_HPP
#define RELAYSIM_LINK_HPP

#include "relaysim/interference.hpp"

namespace relaysim {

// Desired link with deterministic transmitter position. Powers are carried
// internally in dBW; the CLI converts from dBm at the boundary.
struct LinkBudget {
  double tx_power_dBW = 0.0;
  double distance_m = 1.0;
  double alpha = 3.0;
  CompositeFadingParams fading;
};

// SIR in log scale: Gamma ~ Normal(mu_dB, sigma_dB^2).
struct SirDistribution {
  double mu_dB = 0.0;
  double sigma_dB = 0.0;
};

// Received power law of Y = p r^-alpha x for a fixed transmitter.
LognormalParams fixed_link_power(const LinkBudget& lb);

// Received power law when the transmitter is uniformly placed in the
// forwarding annulus (lambda ignored): moment matching of the single-node
// law through the cumulant engine.
LognormalParams random_link_power(const AnnulusField& field);

// Standard normal tail probability Q(x) = P[Z > x].
double q_function(double x);

// Gamma = V0 - V for independent normals in log scale.
SirDistribution sir_distribution(const LognormalParams& desired,
                                 const LognormalParams& interference);

// Pr[Gamma < gamma_th] = Q((mu - gamma_th) / sigma); degenerates to a step
// function when sigma = 0.
double outage_probability(const SirDistribution& sir, double gamma_th_dB);

} // namespace relaysim

#endif
