#ifndef RELAYSIM_CONFIG_HPP
#define RELAYSIM_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "relaysim/scenario.hpp"

namespace relaysim {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  SweepParam param = SweepParam::SdDistance;
  double from = 10.0;
  double to = 100.0;
  int steps = 10;

  std::vector<double> grid() const;
};

// Default grids matching the three studied sweeps.
SweepSpec default_sweep(SweepParam param);

struct RunConfig {
  ScenarioConfig scenario;
  std::optional<SweepSpec> sweep;
  std::string out_path;        // empty: stdout
  std::int64_t trials = 100000;
};

// Flat key = value text (TOML-compatible subset): '#' comments, quoted or
// bare strings, one assignment per line. Unknown and duplicate keys are
// rejected; every omitted field keeps its default. Throws ConfigError with
// the offending line number.
RunConfig parse_config_text(std::string_view text);
RunConfig parse_config(const std::string& path);

SweepParam sweep_param_from_string(std::string_view s);

} // namespace relaysim

#endif
