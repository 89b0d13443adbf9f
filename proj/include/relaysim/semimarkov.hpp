#ifndef RELAYSIM_SEMIMARKOV_HPP
#define RELAYSIM_SEMIMARKOV_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "relaysim/contention.hpp"

namespace relaysim {

enum class Duplex { HD, FD };
enum class RelayStrategy { Fixed, Reactive };

// Three-state process: state 0 transmit (s1), state 1 relay (s2),
// state 2 retransmit (s3).
struct SemiMarkovModel {
  Eigen::Matrix3d P;  // transition probabilities, rows sum to 1
  Eigen::Matrix3d H;  // mean holding times (slots), entries >= 1
  Eigen::Matrix3d R;  // delivered messages per transition
};

struct StationaryDistribution {
  Eigen::Vector3d pi;
};

// Rows 1 and 3 route on direct-delivery then relay-acquisition success;
// the relay always forwards (row 2 returns to transmit).
Eigen::Matrix3d build_transition(double p_sd, double p_sr);

// Holding times: reactive selection costs 1 + mean CRI on every transition
// out of transmit/retransmit that is not a direct delivery; a preassigned
// relay costs fixed_overhead slots instead.
Eigen::Matrix3d build_holding(double mean_selection, RelayStrategy strategy,
                              double fixed_overhead = 1.0);

// One message delivered on every return to transmit; a full-duplex relay
// forwards while receiving the next message, doubling the relayed reward.
Eigen::Matrix3d build_reward(Duplex duplex);

// Solves pi = pi P, sum(pi) = 1. Reducible corners (absorbing transmit
// state) resolve to the stationary vector of the recurrent class.
StationaryDistribution stationary_distribution(const Eigen::Matrix3d& P);

// Renewal-reward steady-state throughput efficiency:
//   eta = sum_i pi_i Rbar_i / sum_i pi_i Hbar_i,
//   Rbar_i = sum_j P_ij R_ij,  Hbar_i = sum_j P_ij H_ij.
double throughput(const SemiMarkovModel& model, const StationaryDistribution& pi);

struct ChainStats {
  double eta = 0.0;
  Eigen::Vector3d cycle_eta;  // per reference state; NaN when unvisited
  std::int64_t transitions = 0;
  double total_time = 0.0;
  double total_reward = 0.0;
};

// Walks the embedded chain. When selection_pgf is given, holding times into
// the relay/retransmit states are drawn as 1 + L with L from the full PGF
// rather than its mean; rewards and times accumulate per transition.
ChainStats simulate_chain(const SemiMarkovModel& model,
                          const TruncatedPgf* selection_pgf,
                          std::int64_t steps, std::mt19937_64& rng);

} // namespace relaysim

#endif
