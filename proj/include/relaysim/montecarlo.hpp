#ifndef RELAYSIM_MONTECARLO_HPP
#define RELAYSIM_MONTECARLO_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "relaysim/scenario.hpp"

namespace relaysim {

// One realization of the interferer deployment, points in meters around the
// origin-located tagged receiver.
struct Deployment {
  Eigen::MatrixX2d points;

  Eigen::Index count() const { return points.rows(); }
};

// Poisson(lambda * annulus area) many points, positions uniform in the
// annulus via inverse-CDF radius sampling.
Deployment sample_ppp(const AnnulusField& field, std::mt19937_64& rng);

// One aggregate interference draw: sum of p r^-alpha x over a fresh
// deployment with true composite fading per node.
double sample_aggregate(const AnnulusField& field, std::mt19937_64& rng);

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;
  std::int64_t trials = 0;
};

SampleStats empirical_interference(const AnnulusField& field, std::int64_t trials,
                                   std::mt19937_64& rng);

// Empirical outage of the direct source-destination link under cfg: desired
// power drawn from the true composite channel, interference drawn from the
// full field (plus UE tier and SI draw in FD).
double empirical_outage(const ScenarioConfig& cfg, double gamma_th_dB,
                        std::int64_t trials, std::mt19937_64& rng);

// Same draws evaluated against a whole threshold grid.
std::vector<double> empirical_outage_curve(const ScenarioConfig& cfg,
                                           const std::vector<double>& gamma_grid_dB,
                                           std::int64_t trials, std::mt19937_64& rng);

} // namespace relaysim

#endif
