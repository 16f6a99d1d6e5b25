#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbpstab::euler {

inline constexpr double kGamma = 1.4;
inline constexpr int kVariables = 4;

/// Conserved variables (rho, rho v1, rho v2, rho E). One-dimensional states
/// carry v2 = 0 and use direction 0.
using State = std::array<double, kVariables>;

struct Primitive {
  double rho;
  double v1;
  double v2;
  double p;

  double velocity(int direction) const { return direction == 0 ? v1 : v2; }
};

Primitive to_primitive(const State& u);
State to_conserved(const Primitive& w);

double pressure(const State& u);
double sound_speed(const Primitive& w);
bool admissible(const State& u);

/// Thrown when a state has non-positive density or pressure (or is not
/// finite). Carries the offending variable name and value.
class InadmissibleState : public std::runtime_error {
 public:
  InadmissibleState(std::string variable, double value);

  const std::string& variable() const { return variable_; }
  double value() const { return value_; }

 private:
  std::string variable_;
  double value_;
};

/// Primitive variables of u; throws InadmissibleState when rho <= 0 or p <= 0.
Primitive checked_primitive(const State& u);

State physical_flux(const State& u, int direction);

// Entropy pair U = -rho s/(gamma-1), s = ln(p / rho^gamma).
double thermodynamic_entropy(const State& u);
double entropy(const State& u);
double entropy_flux(const State& u, int direction);
State entropy_variables(const State& u);
/// Psi = w . f - F, which reduces to rho v_n.
double entropy_potential(const State& u, int direction);

/// Logarithmic mean (b - a) / (ln b - ln a), with a series branch close to
/// a == b. Throws std::invalid_argument for non-positive arguments.
double log_mean(double a, double b);

State flux_central(const State& ul, const State& ur, int direction);
State flux_chandrashekar(const State& ul, const State& ur, int direction);
State flux_kennedy_gruber(const State& ul, const State& ur, int direction);
State flux_rusanov(const State& ul, const State& ur, int direction);

/// Mass-flux dissipation coefficient R1 of the Chandrashekar flux relative
/// to the central flux, in direction 0. Returns (vR - vL)/2 at equal density.
double mass_dissipation_coefficient_ec(const State& ul, const State& ur);

enum class FluxId {
  Central,
  Chandrashekar,
  KennedyGruber,
  Rusanov,
};

std::string_view to_string(FluxId id);
std::optional<FluxId> parse_flux_id(std::string_view name);

State two_point_flux(FluxId id, const State& ul, const State& ur, int direction);

// Overloads on already validated primitive states, used by the volume and
// surface loops of the DG operators.
State physical_flux(const Primitive& w, int direction);
State flux_central(const Primitive& l, const Primitive& r, int direction);
State flux_chandrashekar(const Primitive& l, const Primitive& r, int direction);
State flux_kennedy_gruber(const Primitive& l, const Primitive& r, int direction);
State flux_rusanov(const Primitive& l, const Primitive& r, int direction);
State two_point_flux(FluxId id, const Primitive& l, const Primitive& r, int direction);

/// (w_R - w_L) . f - (Psi_R - Psi_L) for the selected flux.
double ec_condition_residual(FluxId id, const State& ul, const State& ur,
                             int direction);

/// max(|v_n| + c) over both states in one direction.
double max_wave_speed(const State& ul, const State& ur, int direction);

}  // namespace sbpstab::euler
