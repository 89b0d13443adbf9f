#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "relaysim/interference.hpp"
#include "test_support.hpp"

using namespace relaysim;

namespace {

AnnulusField bare_field() {
  return {0.0, 25.0, 500.0, 3.0, 1.0, CompositeFadingParams::unfaded()};
}

AnnulusField default_field() {
  return {5e-5, 25.0, 500.0, 3.0, 1.0, {16.0, 0.0, 10.0}};
}

} // namespace

TEST_CASE("single transmitter kappa_1 hand value") {
  // E[R^-3] over the annulus: 2 (1/25 - 1/500) / (500^2 - 25^2)
  const double hand = 2.0 * (0.04 - 0.002) / (500.0 * 500.0 - 25.0 * 25.0);
  const CumulantVector k = single_tx_cumulants(bare_field(), 2);
  CHECK(std::abs(k.mean() - hand) < 1e-18);
  CHECK(std::abs(k.mean() - 3.0476e-7) < 1e-11);

  SUBCASE("Monte Carlo cross-check over uniform annulus draws") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    testsup::RunningStats stats;
    const double rmin2 = 25.0 * 25.0, rmax2 = 500.0 * 500.0;
    for (int i = 0; i < 10000000; ++i) {
      const double r = std::sqrt(rmin2 + unif(rng) * (rmax2 - rmin2));
      stats.add(std::pow(r, -3.0));
    }
    CHECK(std::abs(stats.mean() - k.mean()) < 3.0 * stats.std_error());
  }
}

TEST_CASE("single transmitter cumulants are homogeneous in the fading scale") {
  AnnulusField scaled = bare_field();
  const double c = 5.0;
  scaled.fading = CompositeFadingParams{
      std::numeric_limits<double>::infinity(), linear_to_db(c), 0.0};
  const CumulantVector base = single_tx_cumulants(bare_field(), 3);
  const CumulantVector k = single_tx_cumulants(scaled, 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(testsup::rel_err(k.kappa(n - 1), std::pow(c, n) * base.kappa(n - 1)) <
          1e-12);
  }
}

TEST_CASE("degenerate and singular geometries are rejected") {
  AnnulusField f = bare_field();
  f.r_min = f.r_max = 100.0;
  CHECK_THROWS_AS(single_tx_cumulants(f, 2), std::invalid_argument);

  AnnulusField g = bare_field();
  g.alpha = 2.0;  // n = 1 hits the n*alpha = 2 singularity
  CHECK_THROWS_AS(single_tx_cumulants(g, 2), std::domain_error);

  AnnulusField h = bare_field();
  h.alpha = 1.5;
  CHECK_THROWS_AS(single_tx_cumulants(h, 2), std::invalid_argument);
}

TEST_CASE("moments_to_cumulants identities") {
  SUBCASE("degenerate constant") {
    const double c = 3.7;
    Eigen::Vector3d mom(c, c * c, c * c * c);
    const CumulantVector k = moments_to_cumulants(mom);
    CHECK(k.kappa(0) == doctest::Approx(c));
    CHECK(std::abs(k.kappa(1)) < 1e-12);
    CHECK(std::abs(k.kappa(2)) < 1e-12);
  }

  SUBCASE("variance identity") {
    Eigen::Vector2d mom(1.7, 4.1);
    CHECK(moments_to_cumulants(mom).variance() ==
          doctest::Approx(4.1 - 1.7 * 1.7).epsilon(1e-14));
  }

  SUBCASE("Poisson cumulants are all lambda") {
    // factorial-moment oracle: mu'_n = sum_k S(n,k) lambda^k
    const double lam = 2.5;
    Eigen::Vector3d mom(lam, lam + lam * lam,
                        lam + 3 * lam * lam + lam * lam * lam);
    const CumulantVector k = moments_to_cumulants(mom);
    for (int i = 0; i < 3; ++i)
      CHECK(k.kappa(i) == doctest::Approx(lam).epsilon(1e-12));
  }

  Eigen::VectorXd one(1);
  one << 1.0;
  CHECK_THROWS_AS(moments_to_cumulants(one), std::invalid_argument);
}

TEST_CASE("ppp_field_cumulants hand value and linearity") {
  AnnulusField f = bare_field();
  f.lambda = 5e-5;
  const CumulantVector k = ppp_field_cumulants(f, 2);
  // 2 pi 5e-5 (1/25 - 1/500) / (3 - 2)
  CHECK(testsup::rel_err(k.mean(), 2.0 * M_PI * 5e-5 * 0.038) < 1e-12);
  CHECK(std::abs(k.mean() - 1.19381e-5) < 1e-9);

  SUBCASE("empty field") {
    AnnulusField empty = f;
    empty.lambda = 0.0;
    const CumulantVector z = ppp_field_cumulants(empty, 3);
    CHECK(z.kappa.isZero(0.0));
  }

  SUBCASE("doubling the intensity doubles every cumulant") {
    AnnulusField twice = f;
    twice.lambda = 1e-4;
    const CumulantVector k2 = ppp_field_cumulants(twice, 4);
    const CumulantVector k1 = ppp_field_cumulants(f, 4);
    for (int i = 0; i < 4; ++i)
      CHECK(testsup::rel_err(k2.kappa(i), 2.0 * k1.kappa(i)) < 1e-14);
  }
}

TEST_CASE("Campbell identity ties the field to the single-transmitter law") {
  const AnnulusField f = default_field();
  const double area = M_PI * (f.r_max * f.r_max - f.r_min * f.r_min);
  const Eigen::VectorXd mom = single_tx_moments(f, 4);
  const CumulantVector k = ppp_field_cumulants(f, 4);
  for (int n = 1; n <= 4; ++n) {
    CHECK(testsup::rel_err(k.kappa(n - 1), f.lambda * area * mom(n - 1)) < 1e-12);
  }
}

TEST_CASE("self-interference cumulants") {
  SUBCASE("perfect cancellation") {
    const SelfInterference si{1.0, 4000.0, CompositeFadingParams::unfaded()};
    const CumulantVector k = self_interference_cumulants(si, 2);
    CHECK(k.mean() == 0.0);
    CHECK(k.variance() == 0.0);
  }

  SUBCASE("unfaded unit leakage") {
    const SelfInterference si{1.0, 0.0, CompositeFadingParams::unfaded()};
    const CumulantVector k = self_interference_cumulants(si, 3);
    CHECK(k.mean() == doctest::Approx(1.0));
    CHECK(std::abs(k.variance()) < 1e-14);
    CHECK(std::abs(k.kappa(2)) < 1e-14);
  }

  SUBCASE("100 dB attenuation with m = 16 against the sampling oracle") {
    const SelfInterference si{1.0, 100.0, {16.0, 0.0, 0.0}};
    const CumulantVector k = self_interference_cumulants(si, 2);
    std::mt19937_64 rng(17);
    testsup::RunningStats stats;
    for (int i = 0; i < 1000000; ++i)
      stats.add(1e-10 * sample_composite(si.fading, rng));
    CHECK(testsup::rel_err(stats.mean(), k.mean()) < 0.01);
  }
}

TEST_CASE("cumulant additivity") {
  const CumulantVector a{Eigen::Vector2d(1.0, 2.0)};
  const CumulantVector b{Eigen::Vector2d(0.25, 0.5)};
  const CumulantVector zero{Eigen::Vector2d::Zero()};

  CHECK(add_cumulants(a, zero).kappa == a.kappa);
  CHECK(add_cumulants(a, b).kappa == add_cumulants(b, a).kappa);

  const CumulantVector c{Eigen::Vector3d(1.0, 2.0, 3.0)};
  CHECK_THROWS_AS(add_cumulants(a, c), std::invalid_argument);
}

TEST_CASE("tier additivity against a Monte Carlo summation oracle") {
  // Unshadowed m = 16 composite keeps the moment estimators convergent at
  // this trial count; the heavy 10 dB shadowing case is exercised (and
  // reported on) by the acceptance suite.
  AnnulusField bs = default_field();
  bs.fading = {16.0, 0.0, 0.0};
  AnnulusField ue = bs;
  ue.tx_power = 0.5;
  // 55 dB keeps the leakage visible in kappa_1 while its (approximated)
  // variance stays a negligible slice of kappa_2; the sampled fading is the
  // true composite, so a dominant SI term would measure the lognormal
  // surrogate's variance bias instead of additivity.
  const SelfInterference si{1.0, 55.0, {16.0, 0.0, 0.0}};

  CumulantVector total = add_cumulants(
      add_cumulants(ppp_field_cumulants(bs, 2), ppp_field_cumulants(ue, 2)),
      self_interference_cumulants(si, 2));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::poisson_distribution<int> pois(bs.lambda * M_PI *
                                      (bs.r_max * bs.r_max - bs.r_min * bs.r_min));
  const double rmin2 = bs.r_min * bs.r_min, rmax2 = bs.r_max * bs.r_max;
  const auto draw_tier = [&](double power) {
    double z = 0.0;
    const int n = pois(rng);
    for (int i = 0; i < n; ++i) {
      const double r = std::sqrt(rmin2 + unif(rng) * (rmax2 - rmin2));
      z += power * std::pow(r, -3.0) * sample_composite(bs.fading, rng);
    }
    return z;
  };
  testsup::RunningStats stats;
  const double leak = si.delta_linear() * si.tx_power;
  for (int t = 0; t < 200000; ++t) {
    stats.add(draw_tier(1.0) + draw_tier(0.5) +
              leak * sample_composite(si.fading, rng));
  }
  CHECK(testsup::rel_err(stats.mean(), total.mean()) < 0.02);
  CHECK(testsup::rel_err(stats.variance(), total.variance()) < 0.02);
}

TEST_CASE("cumulants_to_lognormal matching") {
  SUBCASE("deterministic unit power") {
    const LognormalParams p = cumulants_to_lognormal({Eigen::Vector2d(1.0, 0.0)});
    CHECK(p.mu_dB == 0.0);
    CHECK(p.sigma_dB == 0.0);
  }

  SUBCASE("exact lognormal(0, 1) round trip") {
    const double mean = std::exp(0.5);
    const double var = (std::exp(1.0) - 1.0) * std::exp(1.0);
    const LognormalParams p = cumulants_to_lognormal({Eigen::Vector2d(mean, var)});
    CHECK(std::abs(p.mu_ln()) < 1e-9);
    CHECK(p.sigma_ln() == doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("scale equivariance") {
    const Eigen::Vector2d base(2.0, 5.0);
    const double c = 17.0;
    const LognormalParams p = cumulants_to_lognormal({base});
    const LognormalParams q =
        cumulants_to_lognormal({Eigen::Vector2d(c * base(0), c * c * base(1))});
    CHECK(q.mu_ln() - p.mu_ln() == doctest::Approx(std::log(c)).epsilon(1e-12));
    CHECK(q.sigma_dB == doctest::Approx(p.sigma_dB).epsilon(1e-12));
  }

  SUBCASE("round trip reproduces kappa_1, kappa_2") {
    for (const double k1 : {1e-6, 0.5, 3.0}) {
      for (const double k2 : {0.0, 1e-7, 2.0}) {
        const LognormalParams p =
            cumulants_to_lognormal({Eigen::Vector2d(k1, k2)});
        const double s2 = p.sigma_ln() * p.sigma_ln();
        const double mean = std::exp(p.mu_ln() + 0.5 * s2);
        const double var = mean * mean * std::expm1(s2);
        CHECK(testsup::rel_err(mean, k1) < 1e-9);
        if (k2 > 0.0) CHECK(testsup::rel_err(var, k2) < 1e-9);
      }
    }
  }

  CHECK_THROWS_AS(cumulants_to_lognormal({Eigen::Vector2d(0.0, 1.0)}),
                  std::domain_error);
  CHECK_THROWS_AS(cumulants_to_lognormal({Eigen::Vector2d(-1.0, 1.0)}),
                  std::domain_error);
}
