#ifndef RELAYSIM_SCENARIO_HPP
#define RELAYSIM_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relaysim/link.hpp"
#include "relaysim/semimarkov.hpp"

namespace relaysim {

// Full description of one evaluation point. Optional fields derive from the
// source-destination separation when left unset: the preassigned relay sits
// halfway, the reactive forwarding annulus spans (1 m, sd_distance).
struct ScenarioConfig {
  Duplex duplex = Duplex::HD;
  RelayStrategy strategy = RelayStrategy::Fixed;

  double sd_distance_m = 50.0;
  std::optional<double> sr_distance_m;
  std::optional<double> annulus_r_min_m;
  std::optional<double> annulus_r_max_m;

  double source_power_dBm = 30.0;
  double interferer_power_dBm = 30.0;
  std::optional<double> ue_power_dBm;  // defaults to the source power

  double si_attenuation_dB = 100.0;
  double si_nakagami_m = 16.0;

  double gamma_th_dB = 0.0;
  int contenders = 3;

  double lambda = 5e-5;         // nodes/m^2
  double field_r_min_m = 25.0;
  double field_r_max_m = 500.0;
  double alpha = 3.0;
  CompositeFadingParams fading{16.0, 0.0, 10.0};

  double fixed_relay_overhead_slots = 1.0;
  int l_max = kDefaultLmax;
  double tail_bound = kDefaultTailBound;
  std::uint64_t seed = 12345;

  double resolved_sr_distance() const { return sr_distance_m.value_or(sd_distance_m / 2.0); }
  std::pair<double, double> resolved_annulus() const {
    return {annulus_r_min_m.value_or(1.0), annulus_r_max_m.value_or(sd_distance_m)};
  }
  double resolved_ue_power_dBm() const { return ue_power_dBm.value_or(source_power_dBm); }

  AnnulusField interferer_field() const;  // BS tier
  AnnulusField ue_field() const;          // UE tier (FD only)

  void validate() const;  // throws std::invalid_argument
};

struct LinkDiagnostics {
  LognormalParams desired;
  LognormalParams interference;  // zeroed when the field is interference-free
  SirDistribution sir;
  double outage = 0.0;
  bool interference_free = false;
};

struct ScenarioResult {
  double p_sd = 0.0;
  double p_sr = 0.0;
  double mean_selection_slots = 0.0;
  double eta = 0.0;

  CumulantVector kappa_bs;
  CumulantVector kappa_ue;  // zero vector in HD
  CumulantVector kappa_si;  // zero vector in HD
  LinkDiagnostics sd_link;
  LinkDiagnostics sr_link;
  SemiMarkovModel model;
  Eigen::Vector3d pi;
};

// Full analytical pipeline for one configuration: tier cumulants, lognormal
// matching, outage at both links, selection cost, renewal-reward throughput.
ScenarioResult evaluate_point(const ScenarioConfig& cfg);

enum class SweepParam { SdDistance, SourcePower, SiAttenuation };

struct SweepRow {
  SweepParam param;
  double value;
  Duplex duplex;
  RelayStrategy strategy;
  double p_sd, p_sr, mean_cri, eta;
};

// evaluate_point per grid value for all four (duplex, strategy) combinations,
// rows in grid-major order.
std::vector<SweepRow> sweep(const ScenarioConfig& cfg, SweepParam param,
                            const std::vector<double>& grid);

struct ValidationCheck {
  std::string name;
  double reference = 0.0;  // analytical value
  double measured = 0.0;   // empirical value
  double error = 0.0;      // relative or absolute, see name
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
};

// Monte Carlo reconciliation of the analytical pipeline: interference
// cumulants, outage across the threshold grid, CRI moments, chain throughput.
ValidationReport validate(const ScenarioConfig& cfg, std::int64_t trials);

const char* to_string(Duplex d);
const char* to_string(RelayStrategy s);
const char* to_string(SweepParam p);

} // namespace relaysim

#endif
