#ifndef RELAYSIM_REPORT_HPP
#define RELAYSIM_REPORT_HPP

#include <string>

#include <json.hpp>

#include "relaysim/config.hpp"

namespace relaysim {

// 12 significant digits, the stable CSV float format.
std::string format_sig(double v);

// CSV with header "sweep_param,value,duplex,strategy,p_sd,p_sr,mean_cri,eta",
// one row per grid point x duplex x strategy.
std::string sweep_csv(const ScenarioConfig& cfg, const SweepSpec& spec);

// CSV with columns "slots,cri_prob,tagged_prob" plus a comment footer with
// mean / variance / tail mass of both series.
std::string pgf_csv(int n_total, int l_max, double tail_bound);

// Single evaluate_point as JSON.
nlohmann::json analyze_json(const ScenarioConfig& cfg);

nlohmann::json validation_json(const ValidationReport& report);

} // namespace relaysim

#endif
