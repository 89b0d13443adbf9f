#include "relaysim/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace relaysim {

std::vector<double> SweepSpec::grid() const {
  if (steps < 1) throw ConfigError("sweep: steps must be >= 1");
  std::vector<double> g(static_cast<std::size_t>(steps));
  if (steps == 1) {
    g[0] = from;
    return g;
  }
  const double stride = (to - from) / (steps - 1);
  for (int i = 0; i < steps; ++i) g[static_cast<std::size_t>(i)] = from + stride * i;
  return g;
}

SweepSpec default_sweep(SweepParam param) {
  switch (param) {
    case SweepParam::SdDistance: return {param, 10.0, 100.0, 10};
    case SweepParam::SourcePower: return {param, 0.0, 40.0, 9};
    case SweepParam::SiAttenuation: return {param, 120.0, 40.0, 17};
  }
  throw ConfigError("unknown sweep parameter");
}

SweepParam sweep_param_from_string(std::string_view s) {
  if (s == "sd_distance") return SweepParam::SdDistance;
  if (s == "source_power") return SweepParam::SourcePower;
  if (s == "si_attenuation") return SweepParam::SiAttenuation;
  throw ConfigError("unknown sweep parameter '" + std::string(s) +
                    "' (expected sd_distance, source_power or si_attenuation)");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_number(std::string_view v, int line) {
  const std::string s(v);
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(s, &pos);
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + s + "'");
  }
  if (pos != s.size()) fail(line, "trailing characters after number '" + s + "'");
  return out;
}

std::int64_t parse_int(std::string_view v, int line) {
  const double d = parse_number(v, line);
  const auto i = static_cast<std::int64_t>(d);
  if (static_cast<double>(i) != d) fail(line, "expected an integer");
  return i;
}

std::string parse_string(std::string_view v, int line) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
    return std::string(v.substr(1, v.size() - 2));
  if (!v.empty() && v.find_first_of(" \t\"") == std::string_view::npos)
    return std::string(v);
  fail(line, "expected a string value");
}

} // namespace

RunConfig parse_config_text(std::string_view text) {
  RunConfig rc;
  ScenarioConfig& sc = rc.scenario;

  std::optional<SweepParam> sweep_param;
  std::optional<double> sweep_from, sweep_to;
  std::optional<int> sweep_steps;

  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;

    const auto eq = s.find('=');
    if (eq == std::string_view::npos) fail(line, "expected 'key = value'");
    const std::string key{trim(s.substr(0, eq))};
    const std::string_view val = trim(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (val.empty()) fail(line, "empty value for '" + key + "'");
    if (!seen.insert(key).second) fail(line, "duplicate key '" + key + "'");

    if (key == "duplex") {
      const std::string v = parse_string(val, line);
      if (v == "HD") sc.duplex = Duplex::HD;
      else if (v == "FD") sc.duplex = Duplex::FD;
      else fail(line, "duplex must be HD or FD");
    } else if (key == "strategy") {
      const std::string v = parse_string(val, line);
      if (v == "fixed") sc.strategy = RelayStrategy::Fixed;
      else if (v == "reactive") sc.strategy = RelayStrategy::Reactive;
      else fail(line, "strategy must be fixed or reactive");
    } else if (key == "sd_distance_m") {
      sc.sd_distance_m = parse_number(val, line);
    } else if (key == "sr_distance_m") {
      sc.sr_distance_m = parse_number(val, line);
    } else if (key == "annulus_r_min_m") {
      sc.annulus_r_min_m = parse_number(val, line);
    } else if (key == "annulus_r_max_m") {
      sc.annulus_r_max_m = parse_number(val, line);
    } else if (key == "source_power_dbm") {
      sc.source_power_dBm = parse_number(val, line);
    } else if (key == "interferer_power_dbm") {
      sc.interferer_power_dBm = parse_number(val, line);
    } else if (key == "ue_power_dbm") {
      sc.ue_power_dBm = parse_number(val, line);
    } else if (key == "si_attenuation_db") {
      sc.si_attenuation_dB = parse_number(val, line);
    } else if (key == "si_nakagami_m") {
      sc.si_nakagami_m = parse_number(val, line);
    } else if (key == "gamma_th_db") {
      sc.gamma_th_dB = parse_number(val, line);
    } else if (key == "contenders") {
      sc.contenders = static_cast<int>(parse_int(val, line));
    } else if (key == "lambda") {
      sc.lambda = parse_number(val, line);
    } else if (key == "field_r_min_m") {
      sc.field_r_min_m = parse_number(val, line);
    } else if (key == "field_r_max_m") {
      sc.field_r_max_m = parse_number(val, line);
    } else if (key == "alpha") {
      sc.alpha = parse_number(val, line);
    } else if (key == "nakagami_m") {
      sc.fading.m = parse_number(val, line);
    } else if (key == "shadowing_mu_db") {
      sc.fading.mu_omega_dB = parse_number(val, line);
    } else if (key == "shadowing_sigma_db") {
      sc.fading.sigma_omega_dB = parse_number(val, line);
    } else if (key == "fixed_relay_overhead_slots") {
      sc.fixed_relay_overhead_slots = parse_number(val, line);
    } else if (key == "l_max") {
      sc.l_max = static_cast<int>(parse_int(val, line));
    } else if (key == "tail_bound") {
      sc.tail_bound = parse_number(val, line);
    } else if (key == "seed") {
      sc.seed = static_cast<std::uint64_t>(parse_int(val, line));
    } else if (key == "trials") {
      rc.trials = parse_int(val, line);
    } else if (key == "out") {
      rc.out_path = parse_string(val, line);
    } else if (key == "sweep_param") {
      try {
        sweep_param = sweep_param_from_string(parse_string(val, line));
      } catch (const ConfigError& e) {
        fail(line, e.what());
      }
    } else if (key == "sweep_from") {
      sweep_from = parse_number(val, line);
    } else if (key == "sweep_to") {
      sweep_to = parse_number(val, line);
    } else if (key == "sweep_steps") {
      sweep_steps = static_cast<int>(parse_int(val, line));
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }

  if (sweep_param || sweep_from || sweep_to || sweep_steps) {
    SweepSpec spec = default_sweep(sweep_param.value_or(SweepParam::SdDistance));
    if (sweep_from) spec.from = *sweep_from;
    if (sweep_to) spec.to = *sweep_to;
    if (sweep_steps) spec.steps = *sweep_steps;
    rc.sweep = spec;
  }

  if (rc.trials < 1) throw ConfigError("config: trials must be >= 1");
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return rc;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

} // namespace relaysim
