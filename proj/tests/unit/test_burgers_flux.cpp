#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "sbpstab/burgers_flux.hpp"

using namespace sbpstab::burgers;

namespace {

const std::vector<FluxChoice> kAllFluxes{
    {FluxId::Central, 1.0},   {FluxId::AlphaSplit, 0.0},        {FluxId::AlphaSplit, 0.5},
    {FluxId::AlphaSplit, 1.0}, {FluxId::AlphaSplit, 2.0 / 3.0}, {FluxId::EntropyConserving, 1.0},
    {FluxId::Tadmor, 1.0},    {FluxId::EdRusanov, 1.0},         {FluxId::EsRusanov, 1.0},
};

constexpr int kSamples = 10000;

}  // namespace

TEST_CASE("hand-evaluated flux values") {
  CHECK(flux_central(1, 2) == doctest::Approx(1.25));
  CHECK(flux_central(-3, 3) == doctest::Approx(4.5));
  CHECK(flux_alpha_split(1, 2, 1.0) == doctest::Approx(1.25));
  CHECK(flux_alpha_split(1, 2, 2.0 / 3.0) == doctest::Approx(7.0 / 6.0));
  CHECK(flux_ec(1, 2) == doctest::Approx(7.0 / 6.0));
  CHECK(flux_ec(0, 3) == doctest::Approx(1.5));
  CHECK(flux_tadmor_positive(1, 2) == doctest::Approx(7.0 / 6.0));
  CHECK(flux_tadmor_positive(2, 1) == doctest::Approx(1.25));
  CHECK(flux_ed_rusanov_type(1, 2) == doctest::Approx(1.0 / 6.0));
  CHECK(flux_ed_rusanov_type(2, 1) == doctest::Approx(13.0 / 6.0));
  CHECK(flux_es_rusanov(1, 2) == doctest::Approx(0.25));
  // central part is (1/2 + 1/2)/2, dissipation max|u| (uR - uL)/2 = 1
  CHECK(flux_es_rusanov(-1, 1) == doctest::Approx(-0.5));
}

TEST_CASE("dissipation coefficients") {
  CHECK(dissipation_coefficient({FluxId::EntropyConserving}, 1, 2) == doctest::Approx(1.0 / 6.0));
  CHECK(dissipation_coefficient({FluxId::EntropyConserving}, 2, 1) == doctest::Approx(-1.0 / 6.0));
  CHECK(dissipation_coefficient({FluxId::AlphaSplit, 0.5}, 1, 3) == doctest::Approx(0.5));
  CHECK(dissipation_coefficient({FluxId::AlphaSplit, 2.0 / 3.0}, 4, 4) == 0.0);
  CHECK(dissipation_coefficient({FluxId::EntropyConserving}, 4, 4) == 0.0);
  CHECK(dissipation_coefficient({FluxId::EsRusanov}, -4, -4) == doctest::Approx(4.0));
}

TEST_CASE("alpha outside [0, 1] is rejected") {
  CHECK_THROWS_AS(flux_alpha_split(1, 2, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(flux_alpha_split(1, 2, -0.1), std::invalid_argument);
}

TEST_CASE("alpha = 2/3 split flux equals the entropy-conserving flux") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int s = 0; s < kSamples; ++s) {
    const double a = dist(rng), b = dist(rng);
    REQUIRE(std::abs(flux_alpha_split(a, b, 2.0 / 3.0) - flux_ec(a, b)) <= 1e-12);
  }
}

TEST_CASE("consistency, symmetry and decomposition on random states") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (const FluxChoice& f : kAllFluxes) {
    INFO(to_string(f.id) << " alpha " << f.alpha);
    double worst_consistency = 0.0, worst_symmetry = 0.0, worst_decomposition = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      const double u = dist(rng), a = dist(rng), b = dist(rng);
      worst_consistency = std::max(worst_consistency, std::abs(f(u, u) - 0.5 * u * u));
      const double rebuilt = flux_central(a, b) - 0.5 * dissipation_coefficient(f, a, b) * (b - a);
      worst_decomposition = std::max(worst_decomposition, std::abs(rebuilt - f(a, b)));
      if (f.id == FluxId::Central || f.id == FluxId::EntropyConserving ||
          f.id == FluxId::AlphaSplit) {
        worst_symmetry = std::max(worst_symmetry, std::abs(f(a, b) - f(b, a)));
      }
      if (f.id == FluxId::EsRusanov) {
        // the viscosity max(|uL|, |uR|) is symmetric, the flux itself is not
        worst_symmetry = std::max(worst_symmetry, std::abs(dissipation_coefficient(f, a, b) -
                                                           dissipation_coefficient(f, b, a)));
      }
    }
    CHECK(worst_consistency <= 1e-12);
    CHECK(worst_symmetry <= 1e-12);
    CHECK(worst_decomposition <= 1e-12);
  }
}

TEST_CASE("entropy-conservation condition holds with equality for the EC flux") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  double worst = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    const double a = dist(rng), b = dist(rng);
    worst = std::max(worst, std::abs(ec_condition_residual({FluxId::EntropyConserving}, a, b)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("entropy inequality for Tadmor, ED-Rusanov and ES-Rusanov fluxes") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (FluxId id : {FluxId::Tadmor, FluxId::EdRusanov, FluxId::EsRusanov}) {
    INFO(to_string(id));
    double worst = -1e300;
    for (int s = 0; s < kSamples; ++s) {
      const double a = dist(rng), b = dist(rng);
      worst = std::max(worst, ec_condition_residual({id}, a, b));
    }
    CHECK(worst <= 1e-12);
  }
  CHECK(ec_condition_residual({FluxId::EsRusanov}, 1, 2) <= 0.0);
}

TEST_CASE("central flux produces entropy of either sign") {
  // residual = (uR - uL)^3 / 12
  CHECK(ec_condition_residual({FluxId::Central}, 1, 2) == doctest::Approx(1.0 / 12.0));
  CHECK(ec_condition_residual({FluxId::Central}, 2, 1) == doctest::Approx(-1.0 / 12.0));
}

TEST_CASE("entropy pair is compatible") {
  for (double u : {-3.0, -0.5, 0.0, 0.7, 4.0}) {
    // U'(u) f'(u) = F'(u): u * u = u^2
    const double h = 1e-6;
    const double dU = (entropy(u + h) - entropy(u - h)) / (2 * h);
    const double df = (flux(u + h) - flux(u - h)) / (2 * h);
    const double dF = (entropy_flux(u + h) - entropy_flux(u - h)) / (2 * h);
    CHECK(dU * df == doctest::Approx(dF).epsilon(1e-8));
    CHECK(entropy_variable(u) == doctest::Approx(dU).epsilon(1e-8));
    CHECK(entropy_potential(u) == doctest::Approx(entropy_variable(u) * flux(u) - entropy_flux(u)));
  }
}

TEST_CASE("flux names round-trip") {
  for (const FluxChoice& f : kAllFluxes) CHECK(parse_flux_id(to_string(f.id)) == f.id);
  CHECK_FALSE(parse_flux_id("upwind").has_value());
}
