#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbpstab/dg_burgers.hpp"
#include "sbpstab/dg_euler2d.hpp"
#include "sbpstab/harness/config.hpp"
#include "sbpstab/spectral.hpp"

namespace sbpstab::harness {

/// Burgers discretization plus its projected baseflow.
struct BurgersProblem {
  BurgersDgsem dg;
  Vector baseflow;
  Vector x;
};

BurgersProblem make_burgers_problem(const ExperimentConfig& config);
EulerDgsem2D make_euler_operator(const ExperimentConfig& config);
EulerField2D make_euler_initial(const ExperimentConfig& config);

struct SpectrumResult {
  SpectrumReport report;
  /// FD step actually used (reduced when a perturbed state was inadmissible).
  double fd_step = kDefaultFdStep;
  std::optional<Eigenmode> worst_mode;
  /// Node coordinates matching worst_mode (Burgers only).
  Vector x;
};

/// FD Jacobian at the baseflow (Burgers) or initial state (Euler) and its
/// spectrum. For Euler the step drops to 1e-9, then 1e-10, if a perturbed
/// column is inadmissible.
SpectrumResult run_spectrum(const ExperimentConfig& config, bool with_worst_mode = false);

struct BurgersRecord {
  double t = 0.0;
  /// max_i |u_i - baseflow_i|
  double amplitude = 0.0;
  /// Discrete L2 norm of u.
  double l2_norm = 0.0;
  /// Discrete L2 norm of u - baseflow.
  double fluctuation_l2 = 0.0;
  double entropy = 0.0;
  bool mrfvk = true;
};

struct GrowthTrace {
  std::vector<BurgersRecord> records;
  /// Largest real part of the linearized spectrum at the baseflow.
  double alpha_max = 0.0;
  /// Initial fluctuation amplitude, the prefactor of the reference curve.
  double peak = 0.0;

  double reference(double t) const;
};

struct GrowthResult {
  GrowthTrace trace;
  Vector x;
  Vector baseflow;
  Vector final_field;
  /// M-norm of rhs(baseflow), the magnitude of the inhomogeneous source.
  double source_norm = 0.0;
  double final_time = 0.0;
  std::optional<double> blowup_time;
};

/// Burgers run from baseflow + perturbation with SSP-RK3 (or the configured
/// integrator). Growth mode integrates u' = rhs(u) - rhs(baseflow); simulate
/// mode integrates the homogeneous equation.
GrowthResult run_burgers_growth(const ExperimentConfig& config);

/// min(baseflow) ||u'(t)||^2 <= max(baseflow) ||u'(0)||^2 per record.
/// Throws std::invalid_argument if the baseflow is not strictly positive.
std::vector<bool> check_mrfvk(const GrowthTrace& trace, const Vector& baseflow);

struct EulerRecord {
  double t = 0.0;
  double l2_error = 0.0;
  double entropy = 0.0;
  double min_density = 0.0;
};

struct EulerRunResult {
  std::vector<EulerRecord> trace;
  /// Last admissible state.
  EulerField2D final_field;
  double final_time = 0.0;
  long steps = 0;
  std::optional<CrashReport> crash;
  /// Time of the last trace record.
  double last_output_time = 0.0;
};

using ProgressCallback = std::function<void(double t, long steps)>;

/// LSRK54 (or configured) run of the density wave to t_end. A step during
/// which any stage or the new state is inadmissible ends the run; the crash
/// time is the start of that step and the state there is kept.
EulerRunResult run_euler_wave(const ExperimentConfig& config,
                              const ProgressCallback& progress = {});

struct SweepGrid {
  std::vector<double> amplitudes;
  std::vector<std::pair<int, int>> meshes;
  std::vector<EulerScheme> schemes;
};

struct SweepSpec {
  std::string name;
  ExperimentConfig base;
  SweepGrid grid;
  /// Concurrent runs; 0 means one per hardware thread.
  int jobs = 0;
};

nlohmann::json to_json(const SweepSpec& spec);
SweepSpec sweep_from_json(const nlohmann::json& doc);

struct SweepEntry {
  ExperimentConfig config;
  /// "completed", "crashed" or "failed".
  std::string status;
  double final_time = 0.0;
  std::optional<double> crash_time;
  double final_l2_error = 0.0;
  double final_min_density = 0.0;
  std::string error;
};

/// One density-wave run per grid point, in grid order (amplitude, mesh,
/// scheme). Runs write under base.output_dir/<run name> when it is set.
std::vector<SweepEntry> run_sweep(const SweepSpec& spec);

/// Name of a sweep member, e.g. "a0.98-4x4-euler-central-euler-rusanov".
std::string sweep_run_name(double amplitude, std::pair<int, int> mesh, const EulerScheme& scheme);

}  // namespace sbpstab::harness
