#include "relaysim/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace relaysim {

Deployment sample_ppp(const AnnulusField& field, std::mt19937_64& rng) {
  const double area =
      M_PI * (field.r_max * field.r_max - field.r_min * field.r_min);
  int count = 0;
  if (field.lambda > 0.0) {
    std::poisson_distribution<int> count_dist(field.lambda * area);
    count = count_dist(rng);
  }

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Deployment d;
  d.points.resize(count, 2);
  const double rmin2 = field.r_min * field.r_min;
  const double rmax2 = field.r_max * field.r_max;
  for (int i = 0; i < count; ++i) {
    const double r = std::sqrt(rmin2 + unif(rng) * (rmax2 - rmin2));
    const double theta = 2.0 * M_PI * unif(rng);
    d.points(i, 0) = r * std::cos(theta);
    d.points(i, 1) = r * std::sin(theta);
  }
  return d;
}

double sample_aggregate(const AnnulusField& field, std::mt19937_64& rng) {
  const Deployment d = sample_ppp(field, rng);
  double z = 0.0;
  for (Eigen::Index i = 0; i < d.count(); ++i) {
    const double r = d.points.row(i).norm();
    z += field.tx_power * std::pow(r, -field.alpha) *
         sample_composite(field.fading, rng);
  }
  return z;
}

SampleStats empirical_interference(const AnnulusField& field, std::int64_t trials,
                                   std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("empirical_interference: trials must be >= 1");
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const double z = sample_aggregate(field, rng);
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / trials;
  const double var = trials > 1 ? (sum_sq - trials * mean * mean) / (trials - 1) : 0.0;
  return {mean, var, trials};
}

namespace {

// One SIR draw (dB) of the direct link under cfg.
double draw_sir_dB(const ScenarioConfig& cfg, std::mt19937_64& rng) {
  const double desired = dbm_to_watts(cfg.source_power_dBm) *
                         std::pow(cfg.sd_distance_m, -cfg.alpha) *
                         sample_composite(cfg.fading, rng);
  double z = sample_aggregate(cfg.interferer_field(), rng);
  if (cfg.duplex == Duplex::FD) {
    z += sample_aggregate(cfg.ue_field(), rng);
    const CompositeFadingParams si_fading{cfg.si_nakagami_m, 0.0, 0.0};
    z += db_to_linear(-cfg.si_attenuation_dB) *
         dbm_to_watts(cfg.resolved_ue_power_dBm()) *
         sample_composite(si_fading, rng);
  }
  if (z <= 0.0) return std::numeric_limits<double>::infinity();
  return linear_to_db(desired / z);
}

} // namespace

double empirical_outage(const ScenarioConfig& cfg, double gamma_th_dB,
                        std::int64_t trials, std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("empirical_outage: trials must be >= 1");
  std::int64_t below = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    if (draw_sir_dB(cfg, rng) < gamma_th_dB) ++below;
  }
  return static_cast<double>(below) / static_cast<double>(trials);
}

std::vector<double> empirical_outage_curve(const ScenarioConfig& cfg,
                                           const std::vector<double>& gamma_grid_dB,
                                           std::int64_t trials, std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("empirical_outage_curve: trials must be >= 1");
  std::vector<std::int64_t> below(gamma_grid_dB.size(), 0);
  for (std::int64_t t = 0; t < trials; ++t) {
    const double sir = draw_sir_dB(cfg, rng);
    for (std::size_t i = 0; i < gamma_grid_dB.size(); ++i) {
      if (sir < gamma_grid_dB[i]) ++below[i];
    }
  }
  std::vector<double> out(gamma_grid_dB.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<double>(below[i]) / static_cast<double>(trials);
  return out;
}

} // namespace relaysim
