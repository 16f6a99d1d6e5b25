#include "sbpstab/timeint.hpp"

#include <stdexcept>

namespace sbpstab {

Vector step_ssprk3(const RhsOperator& rhs, const Vector& u, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const Vector u1 = u + dt * rhs(u);
  const Vector u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1));
  return (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2));
}

const Lsrk54Coefficients& lsrk54_coefficients() {
  static const Lsrk54Coefficients coeffs{
      {0.0, -567301805773.0 / 1357537059087.0, -2404267990393.0 / 2016746695238.0,
       -3550918686646.0 / 2091501179385.0, -1275806237668.0 / 842570457699.0},
      {1432997174477.0 / 9575080441755.0, 5161836677717.0 / 13612068292357.0,
       1720146321549.0 / 2090206949498.0, 3134564353537.0 / 4481467310338.0,
       2277821191437.0 / 14882151754819.0},
      {0.0, 1432997174477.0 / 9575080441755.0, 2526269341429.0 / 6820363962896.0,
       2006345519317.0 / 3224310063776.0, 2802321613138.0 / 2924317926251.0},
  };
  return coeffs;
}

Vector step_lsrk54(const RhsOperator& rhs, const Vector& u, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const Lsrk54Coefficients& k = lsrk54_coefficients();
  Vector state = u;
  Vector du = Vector::Zero(u.size());
  for (size_t stage = 0; stage < k.a.size(); ++stage) {
    du = k.a[stage] * du + dt * rhs(state);
    state += k.b[stage] * du;
  }
  return state;
}

std::string_view to_string(Integrator integrator) {
  return integrator == Integrator::Ssprk3 ? "ssprk3" : "lsrk54";
}

std::optional<Integrator> parse_integrator(std::string_view name) {
  if (name == "ssprk3") return Integrator::Ssprk3;
  if (name == "lsrk54") return Integrator::Lsrk54;
  return std::nullopt;
}

Vector step(Integrator integrator, const RhsOperator& rhs, const Vector& u, double dt) {
  return integrator == Integrator::Ssprk3 ? step_ssprk3(rhs, u, dt) : step_lsrk54(rhs, u, dt);
}

double TimeStepController::compute_dt(const Vector& u) const {
  if (!(cfl > 0.0) || !(h > 0.0) || degree < 0) {
    throw std::invalid_argument("time step controller needs CFL > 0, h > 0, N >= 0");
  }
  const double lambda = max_wave_speed ? max_wave_speed(u) : 0.0;
  if (!(lambda > 0.0)) return fallback_dt;
  return cfl * h / ((degree + 1) * lambda);
}

double burgers_max_wave_speed(const Vector& u) {
  return u.size() == 0 ? 0.0 : u.cwiseAbs().maxCoeff();
}

}  // namespace sbpstab
