#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sbpstab/harness/config.hpp"
#include "sbpstab/harness/output.hpp"
#include "sbpstab/harness/presets.hpp"
#include "sbpstab/harness/runs.hpp"

namespace fs = std::filesystem;
using namespace sbpstab;
using namespace sbpstab::harness;

namespace {

enum ExitCode : int {
  kOk = 0,
  kRuntimeError = 1,
  kConfigError = 2,
  kPhysicsCrash = 3,
};

struct RunOptions {
  std::string target;
  std::string out;
  std::optional<double> cfl;
  std::optional<double> t_end;
  std::optional<std::string> integrator;
  std::optional<double> fd_step;
  std::optional<int> trace_stride;
  bool no_field = false;
  bool worst_mode = false;
  int jobs = -1;
};

ExperimentConfig resolve_config(const std::string& target) {
  if (auto preset = find_preset(target)) return *preset;
  if (fs::exists(target)) return load_config(target);
  throw ConfigError("'" + target + "' is neither a preset nor a readable config file");
}

void apply_overrides(ExperimentConfig& config, const RunOptions& opt) {
  if (opt.cfl) config.cfl = *opt.cfl;
  if (opt.t_end) config.t_end = *opt.t_end;
  if (opt.fd_step) config.fd_step = *opt.fd_step;
  if (opt.trace_stride) config.trace_stride = *opt.trace_stride;
  if (opt.integrator) {
    const auto parsed = parse_integrator(*opt.integrator);
    if (!parsed) throw ConfigError("unknown integrator '" + *opt.integrator + "'");
    config.integrator = *parsed;
  }
  if (!opt.out.empty()) config.output_dir = opt.out;
  if (config.output_dir.empty()) {
    config.output_dir = (fs::path("out") / (config.name.empty() ? "run" : config.name)).string();
  }
  validate(config);
}

int cmd_list_presets(bool as_json) {
  if (as_json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const ExperimentConfig& c : presets()) doc.push_back(to_json(c));
    for (const SweepSpec& s : sweep_presets()) doc.push_back(to_json(s));
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  for (const ExperimentConfig& c : presets()) {
    std::cout << c.name << "  [" << to_string(c.equation) << ", " << to_string(c.mode) << "]  "
              << c.description << '\n';
  }
  for (const SweepSpec& s : sweep_presets()) {
    std::cout << s.name << "  [sweep]  " << s.base.description << '\n';
  }
  return kOk;
}

int cmd_show(const std::string& target) {
  if (const auto sweep = find_sweep_preset(target)) {
    std::cout << to_json(*sweep).dump(2) << '\n';
    return kOk;
  }
  std::cout << to_json(resolve_config(target)).dump(2) << '\n';
  return kOk;
}

int cmd_spectrum(const RunOptions& opt) {
  ExperimentConfig config = resolve_config(opt.target);
  apply_overrides(config, opt);
  config.mode = RunMode::Spectrum;
  const bool with_mode = opt.worst_mode && config.equation == Equation::Burgers;
  const SpectrumResult result = run_spectrum(config, with_mode);
  write_spectrum_outputs(config, result, config.output_dir);
  const auto worst = result.report.worst();
  std::cout << config.name << ": " << result.report.eigenvalues.size() << " eigenvalues, max Re = "
            << result.report.max_real_part << " at " << worst.real() << (worst.imag() < 0 ? " - " : " + ")
            << std::abs(worst.imag()) << "i (fd step " << result.fd_step << ")\n"
            << "wrote " << config.output_dir << '\n';
  return kOk;
}

int cmd_simulate(const RunOptions& opt) {
  ExperimentConfig config = resolve_config(opt.target);
  apply_overrides(config, opt);
  if (config.equation == Equation::Burgers) {
    if (config.mode == RunMode::Spectrum) config.mode = RunMode::Growth;
    const GrowthResult result = run_burgers_growth(config);
    write_growth_outputs(config, result, config.output_dir, !opt.no_field);
    const BurgersRecord& last = result.trace.records.back();
    std::cout << config.name << ": t = " << result.final_time << ", amplitude " << last.amplitude
              << " (reference " << result.trace.reference(last.t) << ", alpha_max "
              << result.trace.alpha_max << ")\n"
              << "wrote " << config.output_dir << '\n';
    if (result.blowup_time) {
      std::cout << "blow-up at t = " << *result.blowup_time << '\n';
      return kPhysicsCrash;
    }
    return kOk;
  }
  config.mode = RunMode::Simulate;
  const EulerRunResult result = run_euler_wave(config, [](double t, long steps) {
    std::cerr << "  t = " << t << " (" << steps << " steps)\r" << std::flush;
  });
  std::cerr << '\n';
  write_euler_outputs(config, result, config.output_dir, !opt.no_field);
  std::cout << config.name << ": ";
  if (result.crash) {
    const CrashReport& r = *result.crash;
    std::cout << "crashed at t = " << r.time << " (" << r.variable << " = " << r.value
              << " in element " << r.element << ", node " << r.node_i << "," << r.node_j << ")\n";
  } else {
    std::cout << "reached t = " << result.final_time << " in " << result.steps
              << " steps, L2 density error " << result.trace.back().l2_error << '\n';
  }
  std::cout << "wrote " << config.output_dir << '\n';
  return result.crash ? kPhysicsCrash : kOk;
}

int cmd_sweep(const RunOptions& opt) {
  SweepSpec spec;
  if (const auto preset = find_sweep_preset(opt.target)) {
    spec = *preset;
  } else if (fs::exists(opt.target)) {
    spec = sweep_from_json(read_json_file(opt.target));
  } else {
    throw ConfigError("'" + opt.target + "' is neither a sweep preset nor a readable file");
  }
  if (opt.jobs >= 0) spec.jobs = opt.jobs;
  if (spec.base.name.empty()) spec.base.name = spec.name.empty() ? "sweep" : spec.name;
  apply_overrides(spec.base, opt);
  const std::vector<SweepEntry> entries = run_sweep(spec);
  write_sweep_csv(fs::path(spec.base.output_dir) / "sweep.csv", entries);
  write_json(fs::path(spec.base.output_dir) / "sweep.json", to_json(spec));
  for (const SweepEntry& e : entries) {
    std::cout << e.config.name << ": " << e.status;
    if (e.crash_time) std::cout << " at t = " << *e.crash_time;
    if (!e.error.empty()) std::cout << " (" << e.error << ")";
    std::cout << '\n';
  }
  std::cout << entries.size() << " runs, wrote " << spec.base.output_dir << "/sweep.csv\n";
  return kOk;
}

void add_run_flags(CLI::App* cmd, RunOptions& opt, bool time_flags) {
  cmd->add_option("target", opt.target, "preset name or JSON config file")->required();
  cmd->add_option("-o,--out", opt.out, "output directory (default out/<name>)");
  if (time_flags) {
    cmd->add_option("--cfl", opt.cfl, "CFL number");
    cmd->add_option("--t-end", opt.t_end, "final time");
    cmd->add_option("--integrator", opt.integrator, "ssprk3 or lsrk54");
    cmd->add_option("--trace-stride", opt.trace_stride, "record every n-th step");
  }
  cmd->add_option("--fd-step", opt.fd_step, "finite-difference step of the Jacobian");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear stability lab for split-form and entropy-conserving DGSEM"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list-presets", "list the built-in experiments");
  list->add_flag("--json", list_json, "print full configurations as JSON");

  std::string show_target;
  auto* show = app.add_subcommand("show", "print the configuration of a preset or file");
  show->add_option("target", show_target, "preset name or JSON config file")->required();

  RunOptions spectrum_opt;
  auto* spectrum = app.add_subcommand("spectrum", "FD Jacobian spectrum around the baseflow");
  add_run_flags(spectrum, spectrum_opt, false);
  spectrum->add_flag("--worst-mode", spectrum_opt.worst_mode,
                     "also write the most unstable eigenmode (Burgers)");

  RunOptions simulate_opt;
  auto* simulate = app.add_subcommand("simulate", "time integration (Burgers growth or Euler wave)");
  add_run_flags(simulate, simulate_opt, true);
  simulate->add_flag("--no-field", simulate_opt.no_field, "skip field_final.csv");

  RunOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "density-wave parameter sweep");
  add_run_flags(sweep, sweep_opt, true);
  sweep->add_option("-j,--jobs", sweep_opt.jobs, "concurrent runs (0 = hardware threads)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*list) return cmd_list_presets(list_json);
    if (*show) return cmd_show(show_target);
    if (*spectrum) return cmd_spectrum(spectrum_opt);
    if (*simulate) return cmd_simulate(simulate_opt);
    if (*sweep) return cmd_sweep(sweep_opt);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kRuntimeError;
}
