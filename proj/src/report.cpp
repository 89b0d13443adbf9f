#include "relaysim/report.hpp"

#include <cstdio>

#include "relaysim/contention.hpp"

namespace relaysim {

std::string format_sig(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string sweep_csv(const ScenarioConfig& cfg, const SweepSpec& spec) {
  const std::vector<SweepRow> rows = sweep(cfg, spec.param, spec.grid());
  std::string out = "sweep_param,value,duplex,strategy,p_sd,p_sr,mean_cri,eta\n";
  for (const SweepRow& r : rows) {
    out += to_string(r.param);
    out += ',';
    out += format_sig(r.value);
    out += ',';
    out += to_string(r.duplex);
    out += ',';
    out += to_string(r.strategy);
    out += ',';
    out += format_sig(r.p_sd);
    out += ',';
    out += format_sig(r.p_sr);
    out += ',';
    out += format_sig(r.mean_cri);
    out += ',';
    out += format_sig(r.eta);
    out += '\n';
  }
  return out;
}

std::string pgf_csv(int n_total, int l_max, double tail_bound) {
  const TruncatedPgf cri = cri_pgf(n_total, l_max);
  const TruncatedPgf tagged = tagged_pgf(n_total, l_max);

  int last = 1;
  for (int k = 1; k <= l_max; ++k) {
    if (cri.coeffs(k) > 1e-15 || tagged.coeffs(k) > 1e-15) last = k;
  }

  std::string out = "slots,cri_prob,tagged_prob\n";
  for (int k = 1; k <= last; ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_sig(cri.coeffs(k));
    out += ',';
    out += format_sig(tagged.coeffs(k));
    out += '\n';
  }
  out += "# cri_mean=" + format_sig(pgf_mean(cri, tail_bound)) +
         ",cri_variance=" + format_sig(pgf_variance(cri, tail_bound)) +
         ",cri_tail_mass=" + format_sig(cri.tail_mass()) + "\n";
  out += "# tagged_mean=" + format_sig(pgf_mean(tagged, tail_bound)) +
         ",tagged_variance=" + format_sig(pgf_variance(tagged, tail_bound)) +
         ",tagged_tail_mass=" + format_sig(tagged.tail_mass()) + "\n";
  return out;
}

namespace {

nlohmann::json lognormal_json(const LognormalParams& p) {
  return {{"mu_dB", p.mu_dB}, {"sigma_dB", p.sigma_dB}};
}

nlohmann::json link_json(const LinkDiagnostics& link) {
  return {{"desired", lognormal_json(link.desired)},
          {"interference", lognormal_json(link.interference)},
          {"sir_mu_dB", link.sir.mu_dB},
          {"sir_sigma_dB", link.sir.sigma_dB},
          {"outage", link.outage},
          {"interference_free", link.interference_free}};
}

nlohmann::json kappa_json(const CumulantVector& k) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < k.order(); ++i) arr.push_back(k.kappa(i));
  return arr;
}

} // namespace

nlohmann::json analyze_json(const ScenarioConfig& cfg) {
  const ScenarioResult r = evaluate_point(cfg);
  return {{"duplex", to_string(cfg.duplex)},
          {"strategy", to_string(cfg.strategy)},
          {"p_sd", r.p_sd},
          {"p_sr", r.p_sr},
          {"mean_selection_slots", r.mean_selection_slots},
          {"eta", r.eta},
          {"pi", {r.pi(0), r.pi(1), r.pi(2)}},
          {"kappa_bs", kappa_json(r.kappa_bs)},
          {"kappa_ue", kappa_json(r.kappa_ue)},
          {"kappa_si", kappa_json(r.kappa_si)},
          {"sd_link", link_json(r.sd_link)},
          {"sr_link", link_json(r.sr_link)}};
}

nlohmann::json validation_json(const ValidationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const ValidationCheck& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"reference", c.reference},
                      {"measured", c.measured},
                      {"error", c.error},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  return {{"checks", checks}, {"all_pass", report.all_pass()}};
}

} // namespace relaysim
