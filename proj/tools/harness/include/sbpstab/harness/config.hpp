#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sbpstab/burgers_flux.hpp"
#include "sbpstab/dg_euler2d.hpp"
#include "sbpstab/sbp.hpp"
#include "sbpstab/spectral.hpp"
#include "sbpstab/timeint.hpp"

namespace sbpstab::harness {

/// Invalid or unresolvable experiment description.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Equation { Burgers, Euler2d };
enum class RunMode { Simulate, Spectrum, Growth };
enum class PerturbationKind { None, WorstMode, Cosine, Random };

std::string_view to_string(Equation value);
std::string_view to_string(RunMode value);
std::string_view to_string(PerturbationKind value);

struct BurgersSchemeConfig {
  double alpha = 1.0;
  burgers::FluxId surface = burgers::FluxId::Central;
  bool carpenter_volume = false;
};

/// Burgers: u(x) = offset + sin(frequency * pi * x - phase), reduced to
/// `projection_degree` per element. Euler: the density wave with `amplitude`.
struct BaseflowConfig {
  double frequency = 1.0;
  double phase = 0.7;
  double offset = 2.0;
  int projection_degree = 1;
  ProjectionKind projection = ProjectionKind::GaussL2;
  double amplitude = 0.98;
};

/// Initial fluctuation added to the Burgers baseflow. WorstMode uses the
/// eigenmode of the largest real part scaled to max |u'| = amplitude; Cosine
/// is amplitude * cos(pi x); Random draws amplitude * U(-1, 1) from `seed`.
struct Perturbation {
  PerturbationKind kind = PerturbationKind::None;
  double amplitude = 1e-3;
};

struct ExperimentConfig {
  std::string name;
  std::string description;
  Equation equation = Equation::Burgers;
  int elements_x = 10;
  int elements_y = 1;
  int degree = 3;
  BurgersSchemeConfig burgers;
  EulerScheme euler;
  BaseflowConfig baseflow;
  RunMode mode = RunMode::Spectrum;
  double cfl = 0.05;
  double t_end = 5.0;
  Integrator integrator = Integrator::Ssprk3;
  Perturbation perturbation;
  double fd_step = kDefaultFdStep;
  /// A trace record is kept every `trace_stride` accepted steps (and at the end).
  int trace_stride = 1;
  std::string output_dir;
  std::uint64_t seed = 0;
};

/// Throws ConfigError when a field is out of range.
void validate(const ExperimentConfig& config);

nlohmann::json to_json(const ExperimentConfig& config);
/// Missing keys keep their defaults; unknown keys and bad values throw
/// ConfigError. A metadata document with a "config" member is accepted too.
ExperimentConfig config_from_json(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Reads a JSON file, throwing ConfigError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace sbpstab::harness
