#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>

#include "sbpstab/dg_burgers.hpp"
#include "sbpstab/sbp.hpp"

namespace sbpstab {

/// Three-stage third-order SSP Runge-Kutta step in Shu-Osher form.
Vector step_ssprk3(const RhsOperator& rhs, const Vector& u, double dt);

/// Five-stage fourth-order 2N-storage Runge-Kutta step (Carpenter-Kennedy
/// RK4(5) coefficients): du = a_k du + dt L(u); u += b_k du.
Vector step_lsrk54(const RhsOperator& rhs, const Vector& u, double dt);

struct Lsrk54Coefficients {
  std::array<double, 5> a;
  std::array<double, 5> b;
  std::array<double, 5> c;
};
const Lsrk54Coefficients& lsrk54_coefficients();

enum class Integrator {
  Ssprk3,
  Lsrk54,
};

std::string_view to_string(Integrator integrator);
std::optional<Integrator> parse_integrator(std::string_view name);

Vector step(Integrator integrator, const RhsOperator& rhs, const Vector& u, double dt);

/// dt = CFL h / ((N + 1) lambda_max), with lambda_max supplied per equation.
struct TimeStepController {
  double cfl = 0.05;
  double h = 1.0;
  int degree = 1;
  /// Used when the wave speed vanishes.
  double fallback_dt = 1e-3;
  std::function<double(const Vector&)> max_wave_speed;

  /// Throws std::invalid_argument for a non-positive CFL, h, or degree.
  double compute_dt(const Vector& u) const;
};

/// max |u_i|, the Burgers characteristic speed bound.
double burgers_max_wave_speed(const Vector& u);

}  // namespace sbpstab
