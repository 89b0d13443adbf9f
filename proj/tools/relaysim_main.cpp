#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "relaysim/report.hpp"

namespace {

int write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 2;
  }
  out << body;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  using namespace relaysim;

  CLI::App app{"Steady-state throughput of half/full-duplex relaying under "
               "fixed and reactive relay selection"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> trials;
  app.add_option("--config", config_path, "flat key = value configuration file");
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--seed", seed, "RNG seed override");
  app.add_option("--trials", trials, "Monte Carlo trials override");

  auto* cmd_sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  cmd_sweep->fallthrough();
  std::string param_name;
  std::optional<double> from, to;
  std::optional<int> steps;
  cmd_sweep->add_option("--param", param_name,
                        "sd_distance | source_power | si_attenuation");
  cmd_sweep->add_option("--from", from, "grid start");
  cmd_sweep->add_option("--to", to, "grid end");
  cmd_sweep->add_option("--steps", steps, "number of grid points");

  auto* cmd_validate =
      app.add_subcommand("validate", "Monte Carlo reconciliation report (JSON)");
  cmd_validate->fallthrough();

  auto* cmd_pgf = app.add_subcommand("pgf", "CRI and tagged-delay PMF to CSV");
  cmd_pgf->fallthrough();
  std::optional<int> pgf_n;
  std::optional<int> pgf_lmax;
  cmd_pgf->add_option("--n", pgf_n, "total contenders (default: config value)");
  cmd_pgf->add_option("--l-max", pgf_lmax, "series truncation length");

  auto* cmd_analyze =
      app.add_subcommand("analyze", "single-point evaluation as JSON");
  cmd_analyze->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    RunConfig rc;
    if (!config_path.empty()) rc = parse_config(config_path);
    if (seed) rc.scenario.seed = *seed;
    if (trials) rc.trials = *trials;
    if (!out_path.empty()) rc.out_path = out_path;

    if (cmd_sweep->parsed()) {
      SweepSpec spec = rc.sweep.value_or(default_sweep(SweepParam::SdDistance));
      if (!param_name.empty()) {
        spec = default_sweep(sweep_param_from_string(param_name));
        if (rc.sweep && rc.sweep->param == spec.param) spec = *rc.sweep;
      }
      if (from) spec.from = *from;
      if (to) spec.to = *to;
      if (steps) spec.steps = *steps;
      return write_output(rc.out_path, sweep_csv(rc.scenario, spec));
    }

    if (cmd_validate->parsed()) {
      const ValidationReport report = validate(rc.scenario, rc.trials);
      const int rc_out =
          write_output(rc.out_path, validation_json(report).dump(2) + "\n");
      if (rc_out != 0) return rc_out;
      for (const ValidationCheck& c : report.checks) {
        std::cerr << (c.pass ? "pass " : "FAIL ") << c.name
                  << "  reference=" << format_sig(c.reference)
                  << " measured=" << format_sig(c.measured)
                  << " error=" << format_sig(c.error)
                  << " tolerance=" << format_sig(c.tolerance) << "\n";
      }
      return report.all_pass() ? 0 : 1;
    }

    if (cmd_pgf->parsed()) {
      const int n = pgf_n.value_or(rc.scenario.contenders);
      const int lmax = pgf_lmax.value_or(rc.scenario.l_max);
      return write_output(rc.out_path,
                          pgf_csv(n, lmax, rc.scenario.tail_bound));
    }

    if (cmd_analyze->parsed()) {
      return write_output(rc.out_path,
                          analyze_json(rc.scenario).dump(2) + "\n");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
