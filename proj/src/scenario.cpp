#include "relaysim/scenario.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "relaysim/montecarlo.hpp"

namespace relaysim {

AnnulusField ScenarioConfig::interferer_field() const {
  return {lambda, field_r_min_m, field_r_max_m, alpha,
          dbm_to_watts(interferer_power_dBm), fading};
}

AnnulusField ScenarioConfig::ue_field() const {
  return {lambda, field_r_min_m, field_r_max_m, alpha,
          dbm_to_watts(resolved_ue_power_dBm()), fading};
}

void ScenarioConfig::validate() const {
  if (!(sd_distance_m > 0.0))
    throw std::invalid_argument("config: sd_distance_m must be > 0");
  if (sr_distance_m && !(*sr_distance_m > 0.0))
    throw std::invalid_argument("config: sr_distance_m must be > 0");
  const auto [ann_min, ann_max] = resolved_annulus();
  if (!(ann_min > 0.0) || !(ann_max > ann_min))
    throw std::invalid_argument("config: forwarding annulus must satisfy 0 < r_min < r_max");
  if (contenders < 1)
    throw std::invalid_argument("config: contenders must be >= 1");
  if (lambda < 0.0) throw std::invalid_argument("config: lambda must be >= 0");
  if (!(field_r_min_m > 0.0) || !(field_r_max_m > field_r_min_m))
    throw std::invalid_argument("config: interferer field must satisfy 0 < r_min < r_max");
  if (!(alpha > 2.0))
    throw std::invalid_argument("config: alpha must be > 2");
  if (!(fading.m >= 0.5)) throw std::invalid_argument("config: nakagami_m must be >= 0.5");
  if (fading.sigma_omega_dB < 0.0)
    throw std::invalid_argument("config: shadowing_sigma_db must be >= 0");
  if (!(si_nakagami_m >= 0.5))
    throw std::invalid_argument("config: si_nakagami_m must be >= 0.5");
  if (si_attenuation_dB < 0.0)
    throw std::invalid_argument("config: si_attenuation_db must be >= 0");
  if (fixed_relay_overhead_slots < 1.0)
    throw std::invalid_argument("config: fixed_relay_overhead_slots must be >= 1");
  if (l_max < 1) throw std::invalid_argument("config: l_max must be >= 1");
  if (!(tail_bound > 0.0)) throw std::invalid_argument("config: tail_bound must be > 0");
}

namespace {

CumulantVector zero_cumulants() { return {Eigen::VectorXd::Zero(2)}; }

// Interference law at one receiver; kappa_1 = 0 marks the interference-free
// bypass (outage 0 regardless of threshold).
LinkDiagnostics make_link(const LognormalParams& desired, const CumulantVector& kappa,
                          double gamma_th_dB) {
  LinkDiagnostics link;
  link.desired = desired;
  if (kappa.mean() <= 0.0) {
    link.interference_free = true;
    link.interference = {0.0, 0.0};
    link.sir = {std::numeric_limits<double>::infinity(), desired.sigma_dB};
    link.outage = 0.0;
    return link;
  }
  link.interference = cumulants_to_lognormal(kappa);
  link.sir = sir_distribution(desired, link.interference);
  link.outage = outage_probability(link.sir, gamma_th_dB);
  return link;
}

} // namespace

ScenarioResult evaluate_point(const ScenarioConfig& cfg) {
  cfg.validate();
  ScenarioResult res;

  res.kappa_bs = ppp_field_cumulants(cfg.interferer_field(), 2);
  res.kappa_ue = zero_cumulants();
  res.kappa_si = zero_cumulants();

  // Aggregate CCI per receiving end. In FD both ends transmit, so each
  // receiver adds the UE tier and its own residual self-interference.
  CumulantVector kappa_dest = res.kappa_bs;
  CumulantVector kappa_relay = res.kappa_bs;
  if (cfg.duplex == Duplex::FD) {
    res.kappa_ue = ppp_field_cumulants(cfg.ue_field(), 2);
    const CompositeFadingParams si_fading{cfg.si_nakagami_m, 0.0, 0.0};
    // The destination's leakage comes from its own (UE-class) transmitter,
    // the relay's from the forwarding transmission.
    const SelfInterference si_dest{dbm_to_watts(cfg.resolved_ue_power_dBm()),
                                   cfg.si_attenuation_dB, si_fading};
    const SelfInterference si_relay{dbm_to_watts(cfg.source_power_dBm),
                                    cfg.si_attenuation_dB, si_fading};
    res.kappa_si = self_interference_cumulants(si_dest, 2);
    kappa_dest = add_cumulants(add_cumulants(res.kappa_bs, res.kappa_ue), res.kappa_si);
    kappa_relay = add_cumulants(add_cumulants(res.kappa_bs, res.kappa_ue),
                                self_interference_cumulants(si_relay, 2));
  }

  const double source_dBW = dbm_to_dbw(cfg.source_power_dBm);
  const LognormalParams desired_sd = fixed_link_power(
      {source_dBW, cfg.sd_distance_m, cfg.alpha, cfg.fading});
  LognormalParams desired_sr;
  if (cfg.strategy == RelayStrategy::Fixed) {
    desired_sr = fixed_link_power(
        {source_dBW, cfg.resolved_sr_distance(), cfg.alpha, cfg.fading});
  } else {
    const auto [ann_min, ann_max] = cfg.resolved_annulus();
    desired_sr = random_link_power(
        {0.0, ann_min, ann_max, cfg.alpha, dbm_to_watts(cfg.source_power_dBm), cfg.fading});
  }

  res.sd_link = make_link(desired_sd, kappa_dest, cfg.gamma_th_dB);
  res.sr_link = make_link(desired_sr, kappa_relay, cfg.gamma_th_dB);
  res.p_sd = 1.0 - res.sd_link.outage;
  res.p_sr = 1.0 - res.sr_link.outage;

  res.mean_selection_slots =
      cfg.strategy == RelayStrategy::Reactive
          ? pgf_mean(tagged_pgf(cfg.contenders, cfg.l_max), cfg.tail_bound)
          : 0.0;

  res.model.P = build_transition(res.p_sd, res.p_sr);
  res.model.H = build_holding(res.mean_selection_slots, cfg.strategy,
                              cfg.fixed_relay_overhead_slots);
  res.model.R = build_reward(cfg.duplex);
  res.pi = stationary_distribution(res.model.P).pi;
  res.eta = throughput(res.model, {res.pi});
  return res;
}

std::vector<SweepRow> sweep(const ScenarioConfig& cfg, SweepParam param,
                            const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("sweep: grid must be nonempty");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * 4);
  for (const double value : grid) {
    for (const Duplex d : {Duplex::HD, Duplex::FD}) {
      for (const RelayStrategy s : {RelayStrategy::Fixed, RelayStrategy::Reactive}) {
        ScenarioConfig point = cfg;
        point.duplex = d;
        point.strategy = s;
        switch (param) {
          case SweepParam::SdDistance: point.sd_distance_m = value; break;
          case SweepParam::SourcePower: point.source_power_dBm = value; break;
          case SweepParam::SiAttenuation: point.si_attenuation_dB = value; break;
        }
        const ScenarioResult r = evaluate_point(point);
        rows.push_back({param, value, d, s, r.p_sd, r.p_sr,
                        r.mean_selection_slots, r.eta});
      }
    }
  }
  return rows;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ValidationReport validate(const ScenarioConfig& cfg, std::int64_t trials) {
  if (trials < 1) throw std::invalid_argument("validate: trials must be >= 1");
  cfg.validate();
  ValidationReport report;
  std::mt19937_64 rng(cfg.seed);

  const auto rel_check = [&](std::string name, double reference, double measured,
                             double tol) {
    // Degenerate references (interference-free corner) fall back to absolute.
    const double err = reference != 0.0 ? std::abs(measured / reference - 1.0)
                                        : std::abs(measured);
    report.checks.push_back({std::move(name), reference, measured, err, tol, err < tol});
  };

  // Aggregate CCI cumulants vs the sampling oracle, full composite fading.
  const AnnulusField bs = cfg.interferer_field();
  const CumulantVector kappa = ppp_field_cumulants(bs, 2);
  const SampleStats agg = empirical_interference(bs, trials, rng);
  rel_check("interference_kappa1_rel", kappa.mean(), agg.mean, 0.02);
  rel_check("interference_kappa2_rel", kappa.variance(), agg.variance, 0.02);

  // Same geometry with the channel pinned at x = 1: isolates the Poisson
  // field and radial terms, whose estimator converges at these trial counts.
  AnnulusField bare = bs;
  bare.fading = CompositeFadingParams::unfaded();
  const CumulantVector kappa_bare = ppp_field_cumulants(bare, 2);
  const SampleStats agg_bare = empirical_interference(bare, trials, rng);
  rel_check("interference_kappa1_unfaded_rel", kappa_bare.mean(), agg_bare.mean, 0.02);
  rel_check("interference_kappa2_unfaded_rel", kappa_bare.variance(), agg_bare.variance, 0.02);

  // Outage across the threshold grid, both links of the acceptance band.
  const ScenarioResult point = evaluate_point(cfg);
  std::vector<double> gammas;
  for (int g = -10; g <= 20; ++g) gammas.push_back(static_cast<double>(g));
  const std::vector<double> emp = empirical_outage_curve(cfg, gammas, trials, rng);
  double worst = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const double ana = point.sd_link.interference_free
                           ? 0.0
                           : outage_probability(point.sd_link.sir, gammas[i]);
    worst = std::max(worst, std::abs(emp[i] - ana));
  }
  report.checks.push_back({"outage_grid_max_abs", 0.0, worst, worst, 0.02, worst < 0.02});

  // CRI and tagged-delay means vs the slot-level simulator.
  const std::int64_t tree_runs = 1000000;
  const TruncatedPgf cri = cri_pgf(cfg.contenders, cfg.l_max);
  const TruncatedPgf tagged = tagged_pgf(cfg.contenders, cfg.l_max);
  double sum_cri = 0.0, sum_tag = 0.0;
  for (std::int64_t i = 0; i < tree_runs; ++i) {
    const TreeRun run = simulate_tree(cfg.contenders, rng);
    sum_cri += static_cast<double>(run.cri_length);
    sum_tag += static_cast<double>(run.tagged_delay);
  }
  rel_check("cri_mean_rel", pgf_mean(cri, cfg.tail_bound), sum_cri / tree_runs, 0.01);
  rel_check("tagged_mean_rel", pgf_mean(tagged, cfg.tail_bound), sum_tag / tree_runs, 0.01);

  // Renewal-reward throughput vs the chain simulator.
  const TruncatedPgf* pgf =
      cfg.strategy == RelayStrategy::Reactive ? &tagged : nullptr;
  const ChainStats chain = simulate_chain(point.model, pgf, 1000000, rng);
  rel_check("chain_eta_rel", point.eta, chain.eta, 0.01);

  return report;
}

const char* to_string(Duplex d) { return d == Duplex::HD ? "HD" : "FD"; }
const char* to_string(RelayStrategy s) {
  return s == RelayStrategy::Fixed ? "fixed" : "reactive";
}
const char* to_string(SweepParam p) {
  switch (p) {
    case SweepParam::SdDistance: return "sd_distance";
    case SweepParam::SourcePower: return "source_power";
    case SweepParam::SiAttenuation: return "si_attenuation";
  }
  return "unknown";
}

} // namespace relaysim
