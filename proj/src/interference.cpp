#include "relaysim/interference.hpp"

#include <cmath>
#include <stdexcept>

namespace relaysim {

namespace {

void check_geometry(const AnnulusField& field, int n_max) {
  if (n_max < 1) throw std::invalid_argument("cumulants: n_max must be >= 1");
  if (!(field.r_min > 0.0) || !(field.r_max > field.r_min))
    throw std::invalid_argument("annulus: need 0 < r_min < r_max");
  if (field.lambda < 0.0) throw std::invalid_argument("annulus: lambda must be >= 0");
  if (!(field.tx_power > 0.0)) throw std::invalid_argument("annulus: tx_power must be > 0");
  for (int n = 1; n <= n_max; ++n) {
    if (n * field.alpha == 2.0)
      throw std::domain_error("cumulants: n * alpha = 2 is singular");
  }
  if (!(field.alpha > 2.0))
    throw std::invalid_argument("annulus: alpha must exceed 2 for finite cumulants");
}

} // namespace

Eigen::VectorXd single_tx_moments(const AnnulusField& field, int n_max) {
  check_geometry(field, n_max);
  const LognormalParams x = composite_to_lognormal(field.fading);
  Eigen::VectorXd mom(n_max);
  const double area_norm = field.r_max * field.r_max - field.r_min * field.r_min;
  for (int n = 1; n <= n_max; ++n) {
    const double e = 2.0 - n * field.alpha;
    const double radial =
        2.0 * (std::pow(field.r_min, e) - std::pow(field.r_max, e)) /
        ((n * field.alpha - 2.0) * area_norm);
    mom(n - 1) = std::pow(field.tx_power, n) * radial * lognormal_moment(x, n);
  }
  return mom;
}

CumulantVector single_tx_cumulants(const AnnulusField& field, int n_max) {
  if (n_max < 2) throw std::invalid_argument("single_tx_cumulants: n_max must be >= 2");
  return moments_to_cumulants(single_tx_moments(field, n_max));
}

CumulantVector moments_to_cumulants(const Eigen::VectorXd& raw_moments) {
  const int n_max = static_cast<int>(raw_moments.size());
  if (n_max < 2) throw std::invalid_argument("moments_to_cumulants: need at least 2 moments");
  Eigen::VectorXd kappa(n_max);
  for (int n = 1; n <= n_max; ++n) {
    double sum = 0.0;
    double binom = 1.0;  // C(n-1, k-1), running product over k
    for (int k = 1; k < n; ++k) {
      sum += binom * kappa(k - 1) * raw_moments(n - k - 1);
      binom *= static_cast<double>(n - 1 - k + 1) / k;  // -> C(n-1, k)
    }
    kappa(n - 1) = raw_moments(n - 1) - sum;
  }
  return {kappa};
}

CumulantVector ppp_field_cumulants(const AnnulusField& field, int n_max) {
  if (n_max < 2) throw std::invalid_argument("ppp_field_cumulants: n_max must be >= 2");
  check_geometry(field, n_max);
  const LognormalParams x = composite_to_lognormal(field.fading);
  Eigen::VectorXd kappa(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const double e = 2.0 - field.alpha * n;
    kappa(n - 1) = 2.0 * M_PI * field.lambda * std::pow(field.tx_power, n) *
                   (std::pow(field.r_min, e) - std::pow(field.r_max, e)) /
                   (n * field.alpha - 2.0) * lognormal_moment(x, n);
  }
  return {kappa};
}

CumulantVector self_interference_cumulants(const SelfInterference& si, int n_max) {
  if (n_max < 2) throw std::invalid_argument("self_interference_cumulants: n_max must be >= 2");
  if (si.attenuation_dB < 0.0)
    throw std::invalid_argument("self-interference: attenuation_dB must be >= 0");
  if (!(si.tx_power > 0.0))
    throw std::invalid_argument("self-interference: tx_power must be > 0");
  const LognormalParams x = composite_to_lognormal(si.fading);
  const double scale = si.delta_linear() * si.tx_power;
  Eigen::VectorXd mom(n_max);
  for (int n = 1; n <= n_max; ++n)
    mom(n - 1) = std::pow(scale, n) * lognormal_moment(x, n);
  return moments_to_cumulants(mom);
}

CumulantVector add_cumulants(const CumulantVector& a, const CumulantVector& b) {
  if (a.kappa.size() != b.kappa.size())
    throw std::invalid_argument("add_cumulants: order mismatch");
  return {a.kappa + b.kappa};
}

LognormalParams cumulants_to_lognormal(const CumulantVector& k) {
  if (k.order() < 2) throw std::invalid_argument("cumulants_to_lognormal: need kappa_1, kappa_2");
  const double k1 = k.mean();
  const double k2 = k.variance();
  if (!(k1 > 0.0))
    throw std::domain_error("cumulants_to_lognormal: matching undefined for kappa_1 <= 0");
  if (k2 < 0.0)
    throw std::invalid_argument("cumulants_to_lognormal: kappa_2 must be >= 0");
  const double mu_ln = std::log(k1 * k1 / std::sqrt(k1 * k1 + k2));
  const double sigma_ln = std::sqrt(std::log1p(k2 / (k1 * k1)));
  return {kXi * mu_ln, kXi * sigma_ln};
}

} // namespace relaysim
