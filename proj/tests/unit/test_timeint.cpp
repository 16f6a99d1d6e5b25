#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "sbpstab/dg_burgers.hpp"
#include "sbpstab/timeint.hpp"

using namespace sbpstab;

namespace {

using StepFn = Vector (*)(const RhsOperator&, const Vector&, double);

const RhsOperator kDecay = [](const Vector& u) { return Vector(-u); };

double final_error(StepFn step, double dt) {
  Vector u = Vector::Ones(1);
  const int steps = static_cast<int>(std::lround(1.0 / dt));
  for (int s = 0; s < steps; ++s) u = step(kDecay, u, dt);
  return std::abs(u(0) - std::exp(-1.0));
}

// Amplification polynomial of the 2N-storage recurrence, coefficients of z^0..z^5.
std::array<double, 6> lsrk54_polynomial() {
  const Lsrk54Coefficients& k = lsrk54_coefficients();
  std::array<double, 6> u{1.0, 0, 0, 0, 0, 0}, du{};
  for (int stage = 0; stage < 5; ++stage) {
    std::array<double, 6> next{};
    for (int p = 0; p < 6; ++p) next[p] = k.a[stage] * du[p] + (p > 0 ? u[p - 1] : 0.0);
    du = next;
    for (int p = 0; p < 6; ++p) u[p] += k.b[stage] * du[p];
  }
  return u;
}

}  // namespace

TEST_CASE("zero rhs leaves the state unchanged") {
  const RhsOperator zero = [](const Vector& u) { return Vector(Vector::Zero(u.size())); };
  const Vector u = Vector::LinSpaced(7, -2.0, 5.0);
  CHECK((step_ssprk3(zero, u, 0.3) - u).norm() == 0.0);
  CHECK((step_lsrk54(zero, u, 0.3) - u).norm() == 0.0);
}

TEST_CASE("SSP-RK3 amplification is the cubic Taylor polynomial") {
  for (double lambda : {-0.7, 0.4, -3.0}) {
    for (double dt : {0.01, 0.3}) {
      const RhsOperator rhs = [lambda](const Vector& u) { return Vector(lambda * u); };
      const double z = lambda * dt;
      const double amp = step_ssprk3(rhs, Vector::Ones(1), dt)(0);
      CHECK(std::abs(amp - (1.0 + z + z * z / 2.0 + z * z * z / 6.0)) <= 1e-14);
    }
  }
}

TEST_CASE("LSRK54 amplification polynomial") {
  const std::array<double, 6> poly = lsrk54_polynomial();
  // fourth order: Taylor coefficients of exp(z) up to z^4
  const std::array<double, 5> taylor{1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
  for (int p = 0; p < 5; ++p) CHECK(std::abs(poly[p] - taylor[p]) <= 1e-12);
  CHECK(poly[5] > 0.0);
  CHECK(poly[5] < 1.0 / 24.0);

  const double z = -0.1;
  double expected = 0.0;
  for (int p = 5; p >= 0; --p) expected = expected * z + poly[p];
  CHECK(std::abs(step_lsrk54(kDecay, Vector::Ones(1), 0.1)(0) - expected) <= 1e-12);
}

TEST_CASE("observed convergence orders on u' = -u") {
  const double dts[] = {0.1, 0.05, 0.025, 0.0125};
  for (int k = 0; k + 1 < 4; ++k) {
    const double order3 = std::log2(final_error(step_ssprk3, dts[k]) / final_error(step_ssprk3, dts[k + 1]));
    const double order4 = std::log2(final_error(step_lsrk54, dts[k]) / final_error(step_lsrk54, dts[k + 1]));
    INFO("dt " << dts[k]);
    CHECK(std::abs(order3 - 3.0) <= 0.1);
    CHECK(std::abs(order4 - 4.0) <= 0.1);
  }
}

TEST_CASE("both integrators are linear for a linear rhs") {
  Matrix a(4, 4);
  a << -1, 2, 0, 0.5,
       0, -3, 1, 0,
       0.2, 0, -0.5, 1,
       1, 1, 1, -4;
  const RhsOperator rhs = [a](const Vector& u) { return Vector(a * u); };
  const Vector u = Vector::LinSpaced(4, 1.0, 2.0), v = Vector::LinSpaced(4, -3.0, 0.5);
  for (StepFn step : {StepFn(step_ssprk3), StepFn(step_lsrk54)}) {
    const Vector combined = step(rhs, 2.0 * u - 0.5 * v, 0.05);
    const Vector separate = 2.0 * step(rhs, u, 0.05) - 0.5 * step(rhs, v, 0.05);
    CHECK((combined - separate).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("SSP-RK3 keeps steady states of the inhomogeneous rhs") {
  const Mesh1D mesh{8, -1.0, 1.0};
  const SbpOperators ops = build_lgl_operators(3);
  const BurgersDgsem dg(mesh, ops, {1.0, {burgers::FluxId::Central}, false});
  const Vector base = node_coordinates(mesh, ops).array().cos() + 2.0;
  const RhsOperator rhs = make_inhomogeneous_rhs(dg.as_operator(), base);
  Vector u = base;
  for (int s = 0; s < 1000; ++s) u = step_ssprk3(rhs, u, 1e-3);
  CHECK((u - base).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("time step controller") {
  TimeStepController c{0.05, 0.2, 3, 1e-3, burgers_max_wave_speed};
  const Vector u = Vector::Constant(40, 2.0);
  CHECK(c.compute_dt(u) == doctest::Approx(1.25e-3).epsilon(1e-14));
  const Vector mixed = Vector::LinSpaced(40, -3.0, 2.0);
  CHECK(c.compute_dt(mixed) == doctest::Approx(0.05 * 0.2 / (4.0 * 3.0)));
  TimeStepController doubled = c;
  doubled.cfl = 0.1;
  CHECK(doubled.compute_dt(u) == doctest::Approx(2.0 * c.compute_dt(u)));
  CHECK(c.compute_dt(Vector::Zero(40)) == 1e-3);
  TimeStepController bad = c;
  bad.cfl = 0.0;
  CHECK_THROWS_AS(bad.compute_dt(u), std::invalid_argument);
  CHECK_THROWS_AS(step_ssprk3(kDecay, u, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(step_lsrk54(kDecay, u, -1.0), std::invalid_argument);
}

TEST_CASE("integrator names and dispatch") {
  CHECK(parse_integrator("ssprk3") == Integrator::Ssprk3);
  CHECK(parse_integrator("lsrk54") == Integrator::Lsrk54);
  CHECK_FALSE(parse_integrator("rk4").has_value());
  CHECK(to_string(Integrator::Lsrk54) == "lsrk54");
  const Vector u = Vector::Ones(3);
  CHECK((step(Integrator::Ssprk3, kDecay, u, 0.1) - step_ssprk3(kDecay, u, 0.1)).norm() == 0.0);
  CHECK((step(Integrator::Lsrk54, kDecay, u, 0.1) - step_lsrk54(kDecay, u, 0.1)).norm() == 0.0);
}
