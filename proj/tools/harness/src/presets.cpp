#include "sbpstab/harness/presets.hpp"

#include <algorithm>

namespace sbpstab::harness {

namespace {

using burgers::FluxId;

constexpr double kSkew = 2.0 / 3.0;

ExperimentConfig burgers_spectrum(std::string name, std::string description, double alpha,
                                  FluxId surface, int elements = 10, int degree = 3) {
  ExperimentConfig c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.equation = Equation::Burgers;
  c.elements_x = elements;
  c.degree = degree;
  c.burgers.alpha = alpha;
  c.burgers.surface = surface;
  c.mode = RunMode::Spectrum;
  c.integrator = Integrator::Ssprk3;
  return c;
}

ExperimentConfig burgers_growth(std::string name, std::string description, double alpha,
                                FluxId surface, double t_end,
                                PerturbationKind kind = PerturbationKind::WorstMode) {
  ExperimentConfig c = burgers_spectrum(std::move(name), std::move(description), alpha, surface);
  c.mode = RunMode::Growth;
  c.t_end = t_end;
  c.perturbation = {kind, 1e-3};
  return c;
}

ExperimentConfig euler_wave(std::string name, std::string description, euler::FluxId volume,
                            euler::FluxId surface, double t_end = 5.0, double amplitude = 0.98) {
  ExperimentConfig c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.equation = Equation::Euler2d;
  c.elements_x = 4;
  c.elements_y = 4;
  c.degree = 5;
  c.euler = {volume, surface};
  c.baseflow.amplitude = amplitude;
  c.mode = RunMode::Simulate;
  c.integrator = Integrator::Lsrk54;
  c.t_end = t_end;
  return c;
}

std::vector<ExperimentConfig> build_presets() {
  std::vector<ExperimentConfig> out;
  out.push_back(burgers_spectrum("burgers-fig2-left",
                                 "divergence form (alpha=1), central surface flux", 1.0,
                                 FluxId::Central));
  out.push_back(burgers_spectrum("burgers-fig2-right",
                                 "skew-symmetric form (alpha=2/3), entropy-conserving surface flux",
                                 kSkew, FluxId::EntropyConserving));
  out.push_back(burgers_spectrum("burgers-fig4-left",
                                 "divergence form (alpha=1), entropy-conserving surface flux", 1.0,
                                 FluxId::EntropyConserving));
  out.push_back(burgers_spectrum("burgers-fig4-right",
                                 "skew-symmetric form (alpha=2/3), central surface flux", kSkew,
                                 FluxId::Central));
  out.push_back(burgers_spectrum("burgers-fig5-left",
                                 "divergence form (alpha=1), Tadmor flux without anti-dissipation",
                                 1.0, FluxId::Tadmor));
  out.push_back(burgers_spectrum(
      "burgers-fig5-right",
      "skew-symmetric form (alpha=2/3), Tadmor flux without anti-dissipation", kSkew,
      FluxId::Tadmor));
  {
    ExperimentConfig c = burgers_spectrum(
        "burgers-fig6", "entropy-dissipative Carpenter volume term, Tadmor surface flux", 1.0,
        FluxId::Tadmor);
    c.burgers.carpenter_volume = true;
    out.push_back(c);
  }
  out.push_back(burgers_spectrum("burgers-fig7-20",
                                 "skew-symmetric form, entropy-conserving surface flux, 20 elements",
                                 kSkew, FluxId::EntropyConserving, 20));
  out.push_back(burgers_spectrum("burgers-fig7-40",
                                 "skew-symmetric form, entropy-conserving surface flux, 40 elements",
                                 kSkew, FluxId::EntropyConserving, 40));
  out.push_back(burgers_spectrum("burgers-fig8-rusanov",
                                 "skew-symmetric form, entropy-dissipative Rusanov-type surface flux",
                                 kSkew, FluxId::EdRusanov));
  {
    ExperimentConfig c = burgers_spectrum(
        "burgers-fig8-underresolved",
        "skew-symmetric form, ED Rusanov-type flux, N=15 on 3 elements, baseflow frequency 4 pi",
        kSkew, FluxId::EdRusanov, 3, 15);
    c.baseflow.frequency = 4.0;
    out.push_back(c);
  }

  out.push_back(burgers_growth("burgers-growth-central",
                               "inhomogeneous run, central scheme, worst mode at 1e-3, T=5", 1.0,
                               FluxId::Central, 5.0));
  out.push_back(burgers_growth("burgers-growth-ec",
                               "inhomogeneous run, entropy-conserving scheme, worst mode at 1e-3, T=5",
                               kSkew, FluxId::EntropyConserving, 5.0));
  out.push_back(burgers_growth("burgers-longrun-ec",
                               "inhomogeneous run, entropy-conserving scheme, T=20", kSkew,
                               FluxId::EntropyConserving, 20.0));
  {
    ExperimentConfig c = burgers_growth(
        "burgers-longrun-carpenter",
        "inhomogeneous run, Carpenter volume term + Tadmor flux, worst mode at 1e-3, T=20", 1.0,
        FluxId::Tadmor, 20.0);
    c.burgers.carpenter_volume = true;
    out.push_back(c);
  }
  {
    ExperimentConfig c = burgers_growth(
        "burgers-longrun-carpenter-smooth",
        "inhomogeneous run, Carpenter volume term + Tadmor flux, u' = 1e-3 cos(pi x), T=20", 1.0,
        FluxId::Tadmor, 20.0, PerturbationKind::Cosine);
    c.burgers.carpenter_volume = true;
    out.push_back(c);
  }
  {
    ExperimentConfig c = burgers_growth(
        "burgers-longrun-carpenter-smooth-20",
        "as burgers-longrun-carpenter-smooth on 20 elements", 1.0, FluxId::Tadmor, 20.0,
        PerturbationKind::Cosine);
    c.burgers.carpenter_volume = true;
    c.elements_x = 20;
    out.push_back(c);
  }

  using euler::FluxId;
  out.push_back(euler_wave("euler-fig12", "central volume + central surface, A=0.98, T=5",
                           FluxId::Central, FluxId::Central));
  out.push_back(euler_wave("euler-fig13",
                           "Chandrashekar EC volume + EC surface, A=0.98, T=5",
                           FluxId::Chandrashekar, FluxId::Chandrashekar));
  out.push_back(euler_wave("euler-fig14",
                           "Chandrashekar EC volume + Rusanov surface, A=0.98, T=5",
                           FluxId::Chandrashekar, FluxId::Rusanov));
  out.push_back(euler_wave("euler-fig15",
                           "Kennedy-Gruber volume + Rusanov surface, A=0.98, T=5",
                           FluxId::KennedyGruber, FluxId::Rusanov));
  {
    ExperimentConfig c = euler_wave("euler-fig12-long",
                                    "central volume + central surface, A=0.98, T=200",
                                    FluxId::Central, FluxId::Central, 200.0);
    c.trace_stride = 100;
    out.push_back(c);
  }
  out.push_back(euler_wave("euler-ec-a05",
                           "Chandrashekar EC volume + EC surface, A=0.5, T=40",
                           FluxId::Chandrashekar, FluxId::Chandrashekar, 40.0, 0.5));
  return out;
}

std::vector<SweepSpec> build_sweeps() {
  using euler::FluxId;
  SweepSpec amplitude_sweep;
  amplitude_sweep.name = "euler-amplitude-sweep";
  amplitude_sweep.base = euler_wave("euler-amplitude-sweep", "density-wave matrix, T=5",
                             FluxId::Central, FluxId::Central);
  amplitude_sweep.grid.amplitudes = {0.98, 0.75, 0.5};
  amplitude_sweep.grid.meshes = {{4, 4}, {8, 8}};
  amplitude_sweep.grid.schemes = {{FluxId::Central, FluxId::Central},
                           {FluxId::Central, FluxId::Rusanov},
                           {FluxId::Chandrashekar, FluxId::Chandrashekar},
                           {FluxId::Chandrashekar, FluxId::Rusanov},
                           {FluxId::KennedyGruber, FluxId::Rusanov}};
  return {amplitude_sweep};
}

}  // namespace

const std::vector<ExperimentConfig>& presets() {
  static const std::vector<ExperimentConfig> all = build_presets();
  return all;
}

std::optional<ExperimentConfig> find_preset(std::string_view name) {
  const auto& all = presets();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const ExperimentConfig& c) { return c.name == name; });
  if (it == all.end()) return std::nullopt;
  return *it;
}

const std::vector<SweepSpec>& sweep_presets() {
  static const std::vector<SweepSpec> all = build_sweeps();
  return all;
}

std::optional<SweepSpec> find_sweep_preset(std::string_view name) {
  const auto& all = sweep_presets();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const SweepSpec& s) { return s.name == name; });
  if (it == all.end()) return std::nullopt;
  return *it;
}

}  // namespace sbpstab::harness
