#include "sbpstab/harness/runs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "sbpstab/harness/output.hpp"
#include "sbpstab/timeint.hpp"

namespace sbpstab::harness {

namespace {

// Smaller steps tried for Euler columns whose perturbed state is inadmissible.
constexpr double kFallbackSteps[] = {1e-9, 1e-10};

// Relative slack when deciding that the run has reached t_end.
constexpr double kEndTolerance = 1e-12;

bool reached_end(double t, double t_end) { return t_end - t <= kEndTolerance * t_end; }

}  // namespace

BurgersProblem make_burgers_problem(const ExperimentConfig& c) {
  if (c.equation != Equation::Burgers) throw ConfigError("not a Burgers configuration");
  validate(c);
  Mesh1D mesh{c.elements_x};
  SbpOperators ops = build_lgl_operators(c.degree);
  BurgersScheme scheme;
  scheme.alpha = c.burgers.alpha;
  scheme.surface = {c.burgers.surface, c.burgers.alpha};
  scheme.carpenter_volume = c.burgers.carpenter_volume;

  const BaseflowConfig& b = c.baseflow;
  const auto profile = [&b](double x) {
    return b.offset + std::sin(b.frequency * std::numbers::pi * x - b.phase);
  };
  Vector baseflow =
      project_function(mesh, ops, profile, b.projection_degree, c.degree, b.projection);
  Vector x = node_coordinates(mesh, ops);
  return {BurgersDgsem(mesh, std::move(ops), scheme), std::move(baseflow), std::move(x)};
}

EulerDgsem2D make_euler_operator(const ExperimentConfig& c) {
  if (c.equation != Equation::Euler2d) throw ConfigError("not an Euler configuration");
  validate(c);
  Mesh2D mesh;
  mesh.elements_x = c.elements_x;
  mesh.elements_y = c.elements_y;
  return EulerDgsem2D(mesh, build_lgl_operators(c.degree), c.euler);
}

EulerField2D make_euler_initial(const ExperimentConfig& c) {
  Mesh2D mesh;
  mesh.elements_x = c.elements_x;
  mesh.elements_y = c.elements_y;
  return initialize_density_wave(mesh, c.degree, c.baseflow.amplitude);
}

SpectrumResult run_spectrum(const ExperimentConfig& c, bool with_worst_mode) {
  SpectrumResult result;
  Matrix jacobian;
  if (c.equation == Equation::Burgers) {
    const BurgersProblem problem = make_burgers_problem(c);
    jacobian = fd_jacobian(problem.dg.as_operator(), problem.baseflow, c.fd_step);
    result.fd_step = c.fd_step;
    result.x = problem.x;
  } else {
    const EulerDgsem2D dg = make_euler_operator(c);
    const EulerField2D initial = make_euler_initial(c);
    std::vector<double> steps{c.fd_step};
    for (double s : kFallbackSteps) {
      if (s < c.fd_step) steps.push_back(s);
    }
    for (size_t k = 0; k < steps.size(); ++k) {
      try {
        jacobian = fd_jacobian(dg.as_operator(), initial.values, steps[k]);
        result.fd_step = steps[k];
        break;
      } catch (const JacobianColumnError&) {
        if (k + 1 == steps.size()) throw;
      }
    }
  }
  result.report = eigenspectrum(jacobian);
  if (with_worst_mode) {
    const double peak = c.perturbation.amplitude > 0.0 ? c.perturbation.amplitude : 1e-3;
    result.worst_mode = extract_worst_mode(jacobian, result.report, peak);
  }
  return result;
}

double GrowthTrace::reference(double t) const { return peak * std::exp(alpha_max * t); }

std::vector<bool> check_mrfvk(const GrowthTrace& trace, const Vector& baseflow) {
  if (baseflow.size() == 0 || !(baseflow.minCoeff() > 0.0)) {
    throw std::invalid_argument("MRFVK bound needs a strictly positive baseflow");
  }
  std::vector<bool> flags;
  if (trace.records.empty()) return flags;
  const double lo = baseflow.minCoeff();
  const double hi = baseflow.maxCoeff();
  // Round-off allowance so an unperturbed baseflow, which drifts at the
  // 1e-15 level, does not register as growth.
  const double e0 = trace.records.front().fluctuation_l2 + 1e-12 * hi;
  flags.reserve(trace.records.size());
  for (const BurgersRecord& r : trace.records) {
    flags.push_back(lo * r.fluctuation_l2 * r.fluctuation_l2 <= hi * e0 * e0);
  }
  return flags;
}

GrowthResult run_burgers_growth(const ExperimentConfig& c) {
  const BurgersProblem problem = make_burgers_problem(c);
  const BurgersDgsem& dg = problem.dg;
  const Vector& base = problem.baseflow;
  const RhsOperator homogeneous = dg.as_operator();
  const RhsOperator rhs =
      c.mode == RunMode::Simulate ? homogeneous : make_inhomogeneous_rhs(homogeneous, base);

  const Matrix jacobian = fd_jacobian(homogeneous, base, c.fd_step);
  const SpectrumReport report = eigenspectrum(jacobian);

  GrowthResult result;
  result.x = problem.x;
  result.baseflow = base;
  result.source_norm = dg.l2_norm(dg.rhs(base));
  result.trace.alpha_max = report.max_real_part;

  Vector perturbation = Vector::Zero(base.size());
  const double amp = c.perturbation.amplitude;
  switch (c.perturbation.kind) {
    case PerturbationKind::None:
      break;
    case PerturbationKind::WorstMode:
      if (amp > 0.0) perturbation = extract_worst_mode(jacobian, report, amp).values;
      break;
    case PerturbationKind::Cosine:
      perturbation = amp * (std::numbers::pi * problem.x.array()).cos().matrix();
      break;
    case PerturbationKind::Random: {
      std::mt19937_64 rng(c.seed);
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      for (Eigen::Index i = 0; i < perturbation.size(); ++i) perturbation(i) = amp * dist(rng);
      break;
    }
  }
  result.trace.peak = perturbation.size() ? perturbation.cwiseAbs().maxCoeff() : 0.0;

  TimeStepController controller;
  controller.cfl = c.cfl;
  controller.h = dg.mesh().h();
  controller.degree = c.degree;
  controller.max_wave_speed = burgers_max_wave_speed;

  const auto record = [&](double t, const Vector& u) {
    const Vector fluct = u - base;
    BurgersRecord r;
    r.t = t;
    r.amplitude = fluct.cwiseAbs().maxCoeff();
    r.l2_norm = dg.l2_norm(u);
    r.fluctuation_l2 = dg.l2_norm(fluct);
    r.entropy = dg.entropy(u);
    result.trace.records.push_back(r);
  };

  Vector u = base + perturbation;
  double t = 0.0;
  long steps = 0;
  record(t, u);
  while (!reached_end(t, c.t_end)) {
    const double dt = std::min(controller.compute_dt(u), c.t_end - t);
    Vector next = step(c.integrator, rhs, u, dt);
    if (!next.allFinite()) {
      result.blowup_time = t + dt;
      break;
    }
    u = std::move(next);
    t += dt;
    ++steps;
    if (steps % c.trace_stride == 0 || reached_end(t, c.t_end)) record(t, u);
  }
  if (result.trace.records.back().t != t) record(t, u);
  result.final_field = u;
  result.final_time = t;

  if (base.minCoeff() > 0.0) {
    const std::vector<bool> flags = check_mrfvk(result.trace, base);
    for (size_t k = 0; k < flags.size(); ++k) result.trace.records[k].mrfvk = flags[k];
  } else {
    for (BurgersRecord& r : result.trace.records) r.mrfvk = false;
  }
  return result;
}

EulerRunResult run_euler_wave(const ExperimentConfig& c, const ProgressCallback& progress) {
  const EulerDgsem2D dg = make_euler_operator(c);
  EulerField2D field = make_euler_initial(c);
  const RhsOperator rhs = dg.as_operator();
  const double amplitude = c.baseflow.amplitude;

  TimeStepController controller;
  controller.cfl = c.cfl;
  controller.h = std::min(dg.mesh().hx(), dg.mesh().hy());
  controller.degree = c.degree;
  controller.max_wave_speed = [&dg](const Vector& u) { return dg.max_wave_speed(u); };

  EulerRunResult result;
  const auto record = [&](double t) {
    EulerRecord r;
    r.t = t;
    r.l2_error = l2_error_density(field, t, amplitude);
    r.entropy = dg.total_entropy(field.values);
    r.min_density = dg.min_density(field.values);
    result.trace.push_back(r);
    result.last_output_time = t;
  };

  if (const auto bad = dg.find_inadmissible(field.values)) {
    result.crash = *bad;
    result.crash->time = 0.0;
    result.final_field = field;
    return result;
  }

  double t = 0.0;
  long steps = 0;
  record(t);
  while (!reached_end(t, c.t_end)) {
    const double dt = std::min(controller.compute_dt(field.values), c.t_end - t);
    Vector next;
    try {
      next = step(c.integrator, rhs, field.values, dt);
    } catch (const CrashError& err) {
      result.crash = err.report();
      result.crash->time = t;
      break;
    }
    if (const auto bad = dg.find_inadmissible(next)) {
      result.crash = *bad;
      result.crash->time = t;
      break;
    }
    field.values = std::move(next);
    t += dt;
    ++steps;
    if (steps % c.trace_stride == 0 || reached_end(t, c.t_end)) record(t);
    if (progress && steps % 1000 == 0) progress(t, steps);
  }
  if (result.trace.back().t != t) record(t);
  result.final_field = std::move(field);
  result.final_time = t;
  result.steps = steps;
  return result;
}

nlohmann::json to_json(const SweepSpec& spec) {
  nlohmann::json doc;
  doc["name"] = spec.name;
  doc["base"] = to_json(spec.base);
  nlohmann::json meshes = nlohmann::json::array();
  for (const auto& [kx, ky] : spec.grid.meshes) meshes.push_back({kx, ky});
  nlohmann::json schemes = nlohmann::json::array();
  for (const EulerScheme& s : spec.grid.schemes) {
    schemes.push_back({{"volume", euler::to_string(s.volume)},
                       {"surface", euler::to_string(s.surface)}});
  }
  doc["grid"] = {{"amplitudes", spec.grid.amplitudes}, {"meshes", meshes}, {"schemes", schemes}};
  doc["jobs"] = spec.jobs;
  return doc;
}

SweepSpec sweep_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("sweep: expected an object");
  for (const auto& item : doc.items()) {
    if (item.key() != "name" && item.key() != "base" && item.key() != "grid" &&
        item.key() != "jobs") {
      throw ConfigError("sweep: unknown key '" + item.key() + "'");
    }
  }
  SweepSpec spec;
  try {
    spec.name = doc.value("name", std::string{});
    spec.jobs = doc.value("jobs", 0);
    if (!doc.contains("base")) throw ConfigError("sweep: missing 'base'");
    spec.base = config_from_json(doc.at("base"));
    if (spec.base.equation != Equation::Euler2d) {
      throw ConfigError("sweep: the base configuration must be euler2d");
    }
    const nlohmann::json grid = doc.value("grid", nlohmann::json::object());
    for (const auto& a : grid.value("amplitudes", nlohmann::json::array())) {
      spec.grid.amplitudes.push_back(a.get<double>());
    }
    for (const auto& m : grid.value("meshes", nlohmann::json::array())) {
      if (!m.is_array() || m.size() != 2) throw ConfigError("sweep: meshes are [kx, ky] pairs");
      spec.grid.meshes.emplace_back(m[0].get<int>(), m[1].get<int>());
    }
    for (const auto& s : grid.value("schemes", nlohmann::json::array())) {
      const auto volume = euler::parse_flux_id(s.at("volume").get<std::string>());
      const auto surface = euler::parse_flux_id(s.at("surface").get<std::string>());
      if (!volume || !surface) throw ConfigError("sweep: unknown Euler flux in " + s.dump());
      spec.grid.schemes.push_back({*volume, *surface});
    }
  } catch (const nlohmann::json::exception& err) {
    throw ConfigError(std::string("sweep: ") + err.what());
  }
  if (spec.jobs < 0) throw ConfigError("sweep: jobs must be >= 0");
  for (double a : spec.grid.amplitudes) {
    if (!(a >= 0.0 && a < 1.0)) throw ConfigError("sweep: amplitudes must lie in [0, 1)");
  }
  for (const auto& [kx, ky] : spec.grid.meshes) {
    if (kx < 1 || ky < 1) throw ConfigError("sweep: element counts must be >= 1");
  }
  return spec;
}

std::string sweep_run_name(double amplitude, std::pair<int, int> mesh, const EulerScheme& scheme) {
  std::ostringstream name;
  name << "a" << amplitude << "-" << mesh.first << "x" << mesh.second << "-"
       << euler::to_string(scheme.volume) << "-" << euler::to_string(scheme.surface);
  return name.str();
}

std::vector<SweepEntry> run_sweep(const SweepSpec& spec) {
  std::vector<SweepEntry> entries;
  for (double a : spec.grid.amplitudes) {
    for (const auto& mesh : spec.grid.meshes) {
      for (const EulerScheme& scheme : spec.grid.schemes) {
        SweepEntry entry;
        entry.config = spec.base;
        entry.config.name = sweep_run_name(a, mesh, scheme);
        entry.config.baseflow.amplitude = a;
        entry.config.elements_x = mesh.first;
        entry.config.elements_y = mesh.second;
        entry.config.euler = scheme;
        entry.config.mode = RunMode::Simulate;
        if (!spec.base.output_dir.empty()) {
          entry.config.output_dir =
              (std::filesystem::path(spec.base.output_dir) / entry.config.name).string();
        }
        entries.push_back(std::move(entry));
      }
    }
  }
  if (entries.empty()) return entries;

  const auto run_one = [](SweepEntry& entry) {
    try {
      const EulerRunResult result = run_euler_wave(entry.config);
      entry.status = result.crash ? "crashed" : "completed";
      entry.final_time = result.final_time;
      if (result.crash) entry.crash_time = result.crash->time;
      entry.final_l2_error = result.trace.back().l2_error;
      entry.final_min_density = result.trace.back().min_density;
      if (!entry.config.output_dir.empty()) {
        write_euler_outputs(entry.config, result, entry.config.output_dir);
      }
    } catch (const std::exception& err) {
      entry.status = "failed";
      entry.error = err.what();
    }
  };

  unsigned jobs = spec.jobs > 0 ? static_cast<unsigned>(spec.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(entries.size()));
  std::atomic<size_t> next{0};
  const auto worker = [&]() {
    for (size_t k = next++; k < entries.size(); k = next++) run_one(entries[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  return entries;
}

}  // namespace sbpstab::harness
