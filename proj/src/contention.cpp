#include "relaysim/contention.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace relaysim {

namespace {

using Series = Eigen::VectorXd;

Series monomial_z(int l_max) {
  Series s = Series::Zero(l_max + 1);
  if (l_max >= 1) s(1) = 1.0;
  return s;
}

// Truncated product (a * b)(z) up to z^l_max.
Series mul(const Series& a, const Series& b) {
  const int n = static_cast<int>(a.size());
  Series out = Series::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a(i) == 0.0) continue;
    const int jmax = n - i;
    out.segment(i, jmax) += a(i) * b.head(jmax);
  }
  return out;
}

// Multiply by z (shift up one slot).
Series shift1(const Series& a) {
  Series out = Series::Zero(a.size());
  out.tail(a.size() - 1) = a.head(a.size() - 1);
  return out;
}

void check_sides(SplitDistribution split) {
  if (split.q_sides != 2)
    throw std::invalid_argument("splitting tree: only the binary (q = 2) coin is supported");
}

// Ladder of Q_0..Q_n.
std::vector<Series> cri_ladder(int n, int l_max) {
  std::vector<Series> q(static_cast<std::size_t>(n) + 1);
  q[0] = monomial_z(l_max);
  if (n >= 1) q[1] = q[0];
  for (int m = 2; m <= n; ++m) {
    Series rhs = Series::Zero(l_max + 1);
    for (int k = 1; k < m; ++k) rhs += binomial_split(m, k) * mul(q[k], q[m - k]);
    rhs = shift1(rhs);
    // divide by (1 - 2^{1-m} z^2)
    const double c = std::ldexp(1.0, 1 - m);
    Series out = rhs;
    for (int i = 2; i <= l_max; ++i) out(i) += c * out(i - 2);
    q[m] = std::move(out);
  }
  return q;
}

} // namespace

double binomial_split(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("binomial_split: need 0 <= k <= n");
  double binom = 1.0;
  for (int i = 1; i <= k; ++i) binom *= static_cast<double>(n - k + i) / i;
  return binom * std::ldexp(1.0, -n);
}

TruncatedPgf cri_pgf(int n, int l_max, SplitDistribution split) {
  check_sides(split);
  if (n < 0) throw std::invalid_argument("cri_pgf: n must be >= 0");
  if (l_max < 1) throw std::invalid_argument("cri_pgf: l_max must be >= 1");
  return {cri_ladder(n, l_max)[static_cast<std::size_t>(n)]};
}

TruncatedPgf tagged_pgf(int n_total, int l_max, SplitDistribution split) {
  check_sides(split);
  if (n_total < 1) throw std::invalid_argument("tagged_pgf: n_total must be >= 1");
  if (l_max < 1) throw std::invalid_argument("tagged_pgf: l_max must be >= 1");

  const int n_others = n_total - 1;
  const std::vector<Series> q = cri_ladder(n_others, l_max);
  std::vector<Series> g(static_cast<std::size_t>(n_total) + 1);
  g[1] = monomial_z(l_max);
  for (int m = 1; m <= n_others; ++m) {
    // tagged flips 0: joins a (k+1)-contender sub-tree resolved first
    Series g0 = Series::Zero(l_max + 1);
    for (int k = 0; k < m; ++k) g0 += binomial_split(m, k) * g[k + 1];
    // tagged flips 1: waits out the k-contender sub-CRI, then contends with m-k others
    Series g1 = Series::Zero(l_max + 1);
    for (int k = 1; k <= m; ++k)
      g1 += binomial_split(m, k) * mul(q[k], g[m - k + 1]);
    Series rhs = 0.5 * shift1(g0 + g1);
    // divide by (1 - 2^{-(m+1)} (z + z^2))
    const double c = std::ldexp(1.0, -(m + 1));
    Series out = rhs;
    out(1) += c * out(0);
    for (int i = 2; i <= l_max; ++i) out(i) += c * (out(i - 1) + out(i - 2));
    g[m + 1] = std::move(out);
  }
  return {g[static_cast<std::size_t>(n_total)]};
}

double pgf_mean(const TruncatedPgf& p, double tail_bound) {
  if (p.tail_mass() > tail_bound)
    throw std::domain_error("pgf_mean: truncation tail exceeds bound, moment would be biased");
  double mean = 0.0;
  for (int k = 1; k <= p.l_max(); ++k) mean += k * p.coeffs(k);
  return mean;
}

double pgf_variance(const TruncatedPgf& p, double tail_bound) {
  if (p.tail_mass() > tail_bound)
    throw std::domain_error("pgf_variance: truncation tail exceeds bound, moment would be biased");
  double mean = 0.0, fact2 = 0.0;
  for (int k = 1; k <= p.l_max(); ++k) {
    mean += k * p.coeffs(k);
    fact2 += static_cast<double>(k) * (k - 1) * p.coeffs(k);
  }
  return fact2 + mean - mean * mean;
}

double pgf_pmf(const TruncatedPgf& p, int x) {
  if (x < 0 || x > p.l_max())
    throw std::out_of_range("pgf_pmf: slot count outside the truncated series");
  return p.coeffs(x);
}

TreeRun simulate_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("simulate_tree: n must be >= 1");
  constexpr std::int64_t kSlotGuard = 1000000;

  struct Group {
    int count;
    bool tagged;
  };
  std::vector<Group> stack;
  stack.push_back({n, true});

  TreeRun run;
  std::int64_t slot = 0;
  while (!stack.empty()) {
    auto [count, tagged] = stack.back();
    stack.pop_back();
    ++slot;
    if (slot > kSlotGuard)
      throw std::runtime_error("simulate_tree: slot guard exceeded");
    if (count == 1) {
      if (run.first_success == 0) run.first_success = slot;
      if (tagged) run.tagged_delay = slot;
    } else if (count >= 2) {
      // every contender flips a fair bit; group 0 is resolved first
      int remaining = count - (tagged ? 1 : 0);
      int zeros = 0;
      while (remaining > 0) {
        const int chunk = remaining < 63 ? remaining : 63;
        zeros += std::popcount(rng() & ((std::uint64_t{1} << chunk) - 1));
        remaining -= chunk;
      }
      bool tagged_zero = false;
      if (tagged) {
        tagged_zero = (rng() >> 63) != 0;
        zeros += tagged_zero ? 1 : 0;
      }
      stack.push_back({count - zeros, tagged && !tagged_zero});  // group 1
      stack.push_back({zeros, tagged_zero});                     // group 0
    }
  }
  run.cri_length = slot;
  return run;
}

int sample_pgf(const TruncatedPgf& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = unif(rng);
  double acc = 0.0;
  for (int k = 0; k <= p.l_max(); ++k) {
    acc += p.coeffs(k);
    if (u < acc) return k;
  }
  return p.l_max();
}

} // namespace relaysim
