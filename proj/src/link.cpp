#include "relaysim/link.hpp"

#include <cmath>
#include <stdexcept>

namespace relaysim {

LognormalParams fixed_link_power(const LinkBudget& lb) {
  if (!(lb.distance_m > 0.0)) throw std::invalid_argument("link: distance must be > 0");
  if (!(lb.alpha > 0.0)) throw std::invalid_argument("link: alpha must be > 0");
  const LognormalParams f = composite_to_lognormal(lb.fading);
  return {lb.tx_power_dBW - 10.0 * lb.alpha * std::log10(lb.distance_m) + f.mu_dB,
          f.sigma_dB};
}

LognormalParams random_link_power(const AnnulusField& field) {
  return cumulants_to_lognormal(single_tx_cumulants(field, 2));
}

double q_function(double x) { return 0.5 * std::erfc(x / M_SQRT2); }

SirDistribution sir_distribution(const LognormalParams& desired,
                                 const LognormalParams& interference) {
  return {desired.mu_dB - interference.mu_dB,
          std::hypot(desired.sigma_dB, interference.sigma_dB)};
}

double outage_probability(const SirDistribution& sir, double gamma_th_dB) {
  if (sir.sigma_dB < 0.0) throw std::invalid_argument("outage: sigma must be >= 0");
  if (sir.sigma_dB == 0.0) {
    if (sir.mu_dB > gamma_th_dB) return 0.0;
    if (sir.mu_dB < gamma_th_dB) return 1.0;
    return 0.5;
  }
  return q_function((sir.mu_dB - gamma_th_dB) / sir.sigma_dB);
}

} // namespace relaysim
