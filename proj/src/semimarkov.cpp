#include "relaysim/semimarkov.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace relaysim {

Eigen::Matrix3d build_transition(double p_sd, double p_sr) {
  if (!(p_sd >= 0.0 && p_sd <= 1.0) || !(p_sr >= 0.0 && p_sr <= 1.0))
    throw std::invalid_argument("build_transition: probabilities must lie in [0, 1]");
  Eigen::Matrix3d P;
  const Eigen::RowVector3d route(p_sd, (1.0 - p_sd) * p_sr,
                                 (1.0 - p_sd) * (1.0 - p_sr));
  P.row(0) = route;
  P.row(1) << 1.0, 0.0, 0.0;
  P.row(2) = route;
  return P;
}

Eigen::Matrix3d build_holding(double mean_selection, RelayStrategy strategy,
                              double fixed_overhead) {
  if (mean_selection < 0.0)
    throw std::invalid_argument("build_holding: mean_selection must be >= 0");
  if (fixed_overhead < 1.0)
    throw std::invalid_argument("build_holding: holding times are at least one slot");
  const double h = strategy == RelayStrategy::Reactive ? 1.0 + mean_selection
                                                       : fixed_overhead;
  Eigen::Matrix3d H = Eigen::Matrix3d::Ones();
  H(0, 1) = H(0, 2) = h;
  H(2, 1) = H(2, 2) = h;
  return H;
}

Eigen::Matrix3d build_reward(Duplex duplex) {
  Eigen::Matrix3d R = Eigen::Matrix3d::Zero();
  R(0, 0) = 1.0;
  R(2, 0) = 1.0;
  R(1, 0) = duplex == Duplex::FD ? 2.0 : 1.0;
  return R;
}

StationaryDistribution stationary_distribution(const Eigen::Matrix3d& P) {
  if (((P.rowwise().sum().array() - 1.0).abs() > 1e-9).any())
    throw std::invalid_argument("stationary_distribution: P must be row-stochastic");
  // pi (P - I) = 0 with the normalization appended; least squares handles
  // the reducible corners as well.
  Eigen::Matrix<double, 4, 3> a;
  a.topRows<3>() = P.transpose() - Eigen::Matrix3d::Identity();
  a.row(3).setOnes();
  const Eigen::Vector4d b(0.0, 0.0, 0.0, 1.0);
  Eigen::Vector3d pi = a.colPivHouseholderQr().solve(b);
  pi = pi.cwiseMax(0.0);
  pi /= pi.sum();
  return {pi};
}

double throughput(const SemiMarkovModel& model, const StationaryDistribution& pi) {
  const Eigen::Vector3d rbar = (model.P.array() * model.R.array()).rowwise().sum();
  const Eigen::Vector3d hbar = (model.P.array() * model.H.array()).rowwise().sum();
  return pi.pi.dot(rbar) / pi.pi.dot(hbar);
}

ChainStats simulate_chain(const SemiMarkovModel& model,
                          const TruncatedPgf* selection_pgf,
                          std::int64_t steps, std::mt19937_64& rng) {
  if (steps < 1) throw std::invalid_argument("simulate_chain: steps must be >= 1");

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ChainStats stats;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  stats.cycle_eta.setConstant(nan);

  // First/last visit bookkeeping for the cycle-based reference-state view.
  Eigen::Vector3d first_time, first_reward, last_time, last_reward;
  Eigen::Vector3i visits = Eigen::Vector3i::Zero();

  int state = 0;
  for (std::int64_t t = 0; t < steps; ++t) {
    if (visits(state)++ == 0) {
      first_time(state) = stats.total_time;
      first_reward(state) = stats.total_reward;
    }
    last_time(state) = stats.total_time;
    last_reward(state) = stats.total_reward;

    const double u = unif(rng);
    int next = 2;
    if (u < model.P(state, 0)) {
      next = 0;
    } else if (u < model.P(state, 0) + model.P(state, 1)) {
      next = 1;
    }

    double hold = model.H(state, next);
    if (selection_pgf != nullptr && (state == 0 || state == 2) && next != 0) {
      hold = 1.0 + sample_pgf(*selection_pgf, rng);
    }
    stats.total_time += hold;
    stats.total_reward += model.R(state, next);
    state = next;
  }

  stats.transitions = steps;
  stats.eta = stats.total_reward / stats.total_time;
  for (int s = 0; s < 3; ++s) {
    if (visits(s) >= 2 && last_time(s) > first_time(s)) {
      stats.cycle_eta(s) =
          (last_reward(s) - first_reward(s)) / (last_time(s) - first_time(s));
    }
  }
  return stats;
}

} // namespace relaysim
