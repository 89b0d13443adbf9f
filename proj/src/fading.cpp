#include "relaysim/fading.hpp"

#include <cmath>
#include <stdexcept>

namespace relaysim {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;
constexpr double kPiSquaredOver6 = 1.6449340668482264365;

// Bernoulli numbers B2, B4, ..., B14.
constexpr double kBernoulli[] = {
    1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0,  -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,
};

bool is_small_integer(double m) {
  return m == std::floor(m) && m >= 1.0 && m <= 256.0;
}

} // namespace

double digamma(double m) {
  if (!(m > 0.0)) throw std::domain_error("digamma: argument must be positive");
  if (std::isinf(m)) return m;

  if (is_small_integer(m)) {
    // psi(m) = -gamma + sum_{k=1}^{m-1} 1/k, exact for integers
    double acc = -kEulerGamma;
    for (int k = 1; k < static_cast<int>(m); ++k) acc += 1.0 / k;
    return acc;
  }

  // Shift into the asymptotic regime, psi(x) = psi(x+1) - 1/x.
  double shift = 0.0;
  double x = m;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }

  // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
  double result = std::log(x) - 0.5 / x;
  const double inv2 = 1.0 / (x * x);
  double power = inv2;
  for (int k = 1; k <= 7; ++k) {
    const double term = kBernoulli[k - 1] / (2 * k) * power;
    result -= term;
    if (std::abs(term) < 1e-14 * std::abs(result)) break;
    power *= inv2;
  }
  return result + shift;
}

double hurwitz_zeta2(double m) {
  if (!(m > 0.0)) throw std::domain_error("hurwitz_zeta2: argument must be positive");
  if (std::isinf(m)) return 0.0;

  if (is_small_integer(m)) {
    // zeta(2, m) = pi^2/6 - sum_{k=1}^{m-1} 1/k^2
    double acc = kPiSquaredOver6;
    for (int k = 1; k < static_cast<int>(m); ++k) acc -= 1.0 / (double(k) * k);
    return acc;
  }

  // Euler-Maclaurin: zeta(2, a) = sum_{k<N} (a+k)^-2 + 1/w + 1/(2 w^2)
  //                              + sum_j B_{2j} w^-(2j+1),  w = a + N
  double head = 0.0;
  double w = m;
  while (w < 16.0) {
    head += 1.0 / (w * w);
    w += 1.0;
  }
  double result = head + 1.0 / w + 0.5 / (w * w);
  const double inv2 = 1.0 / (w * w);
  double power = inv2 / w;
  for (int j = 1; j <= 6; ++j) {
    const double term = kBernoulli[j - 1] * power;
    result += term;
    if (std::abs(term) < 1e-14 * result) break;
    power *= inv2;
  }
  return result;
}

LognormalParams composite_to_lognormal(const CompositeFadingParams& f) {
  if (!(f.m >= 0.5)) throw std::invalid_argument("composite fading: m must be >= 0.5");
  if (f.sigma_omega_dB < 0.0)
    throw std::invalid_argument("composite fading: sigma_omega_dB must be >= 0");
  if (std::isinf(f.m)) {
    // Multipath term vanishes in the m -> inf limit.
    return {f.mu_omega_dB, f.sigma_omega_dB};
  }
  const double mu = kXi * (digamma(f.m) - std::log(f.m)) + f.mu_omega_dB;
  const double var = kXi * kXi * hurwitz_zeta2(f.m) +
                     f.sigma_omega_dB * f.sigma_omega_dB;
  return {mu, std::sqrt(var)};
}

double lognormal_moment(const LognormalParams& p, int n) {
  if (n < 1) throw std::invalid_argument("lognormal_moment: n must be >= 1");
  const double mu = p.mu_ln();
  const double s = p.sigma_ln();
  return std::exp(n * mu + 0.5 * n * n * s * s);
}

double sample_composite(const CompositeFadingParams& f, std::mt19937_64& rng) {
  double multipath = 1.0;
  if (!std::isinf(f.m)) {
    std::gamma_distribution<double> gamma(f.m, 1.0 / f.m);
    multipath = gamma(rng);
  }
  double shadow = db_to_linear(f.mu_omega_dB);
  if (f.sigma_omega_dB > 0.0) {
    std::normal_distribution<double> normal(f.mu_omega_dB, f.sigma_omega_dB);
    shadow = db_to_linear(normal(rng));
  }
  return multipath * shadow;
}

} // namespace relaysim
