#ifndef RELAYSIM_CONTENTION_HPP
#define RELAYSIM_CONTENTION_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace relaysim {

// Probability series over slot counts 0..l_max with explicit tail mass.
// coeffs(0) = 0 for every CRI/delay series: resolution takes at least one slot.
struct TruncatedPgf {
  Eigen::VectorXd coeffs;

  int l_max() const { return static_cast<int>(coeffs.size()) - 1; }
  double tail_mass() const { return 1.0 - coeffs.sum(); }
};

// Splitting coin. Only the fair binary tree is implemented; the field exists
// so a Q-ary extension keeps the call sites.
struct SplitDistribution {
  int q_sides = 2;
};

inline constexpr int kDefaultLmax = 512;
inline constexpr double kDefaultTailBound = 1e-6;

// B_{n,k} = C(n,k) 2^-n, the fair-coin split probabilities.
double binomial_split(int n, int k);

// PGF of the contention resolution interval length L_n:
//   Q_0 = Q_1 = z;   Q_n = z sum_k B_{n,k} Q_k Q_{n-k}  (n >= 2),
// with the self-referential k in {0, n} terms removed by truncated-series
// division by (1 - 2^{1-n} z^2).
TruncatedPgf cri_pgf(int n, int l_max = kDefaultLmax, SplitDistribution split = {});

// PGF of the slot at which a tagged contender (out of n_total) transmits
// alone:
//   G_1 = z;  G_{N+1} = (1/2)[G0 + G1],
//   G0 = z sum_k B_{N,k} G_{k+1},  G1 = z sum_k B_{N,k} Q_k G_{N-k+1},
// self-referential terms removed by division by (1 - 2^{-(N+1)} (z + z^2)).
TruncatedPgf tagged_pgf(int n_total, int l_max = kDefaultLmax, SplitDistribution split = {});

// Factorial-moment identities on the series. Both refuse (throw) when the
// truncation tail exceeds tail_bound; a truncated series would bias them low.
double pgf_mean(const TruncatedPgf& p, double tail_bound = kDefaultTailBound);
double pgf_variance(const TruncatedPgf& p, double tail_bound = kDefaultTailBound);

// Pr[X = x], the series coefficient (equals G^(x)(0)/x!).
double pgf_pmf(const TruncatedPgf& p, int x);

// One slot-level run of the blocked-access binary tree with n initial
// contenders. Contender 0 is the tagged one. first_success is the slot of the
// first singleton transmission, kept so the time-to-first-reply variant of the
// selection cost stays measurable.
struct TreeRun {
  std::int64_t cri_length = 0;
  std::int64_t tagged_delay = 0;
  std::int64_t first_success = 0;
};

TreeRun simulate_tree(int n, std::mt19937_64& rng);

// Inverse-CDF draw from a truncated PGF (tail mass mapped to l_max).
int sample_pgf(const TruncatedPgf& p, std::mt19937_64& rng);

} // namespace relaysim

#endif
