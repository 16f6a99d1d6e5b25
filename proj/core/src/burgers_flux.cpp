#include "sbpstab/burgers_flux.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sbpstab::burgers {

namespace {

constexpr std::array<std::pair<FluxId, std::string_view>, 6> kNames{{
    {FluxId::Central, "central"},
    {FluxId::AlphaSplit, "alpha-split"},
    {FluxId::EntropyConserving, "ec"},
    {FluxId::Tadmor, "tadmor"},
    {FluxId::EdRusanov, "ed-rusanov"},
    {FluxId::EsRusanov, "es-rusanov"},
}};

double max_speed(double ul, double ur) { return std::max(std::abs(ul), std::abs(ur)); }

}  // namespace

std::string_view to_string(FluxId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "unknown";
}

std::optional<FluxId> parse_flux_id(std::string_view name) {
  for (const auto& [key, n] : kNames) {
    if (n == name) return key;
  }
  return std::nullopt;
}

double flux_central(double ul, double ur) { return 0.5 * (flux(ul) + flux(ur)); }

double flux_alpha_split(double ul, double ur, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("split parameter alpha must lie in [0, 1]");
  }
  const double jump = ur - ul;
  return flux_central(ul, ur) - 0.5 * (0.5 * (1.0 - alpha) * jump) * jump;
}

double flux_ec(double ul, double ur) { return (ul * ul + ul * ur + ur * ur) / 6.0; }

double flux_tadmor_positive(double ul, double ur) {
  const double jump = ur - ul;
  return flux_central(ul, ur) - 0.5 * std::max(jump / 6.0, 0.0) * jump;
}

double flux_ed_rusanov_type(double ul, double ur) {
  return flux_ec(ul, ur) - 0.5 * max_speed(ul, ur) * (ur - ul);
}

double flux_es_rusanov(double ul, double ur) {
  return flux_central(ul, ur) - 0.5 * max_speed(ul, ur) * (ur - ul);
}

double FluxChoice::operator()(double ul, double ur) const {
  switch (id) {
    case FluxId::Central: return flux_central(ul, ur);
    case FluxId::AlphaSplit: return flux_alpha_split(ul, ur, alpha);
    case FluxId::EntropyConserving: return flux_ec(ul, ur);
    case FluxId::Tadmor: return flux_tadmor_positive(ul, ur);
    case FluxId::EdRusanov: return flux_ed_rusanov_type(ul, ur);
    case FluxId::EsRusanov: return flux_es_rusanov(ul, ur);
  }
  throw std::logic_error("unhandled Burgers flux id");
}

double dissipation_coefficient(const FluxChoice& flux, double ul, double ur) {
  const double jump = ur - ul;
  switch (flux.id) {
    case FluxId::Central: return 0.0;
    case FluxId::AlphaSplit: return 0.5 * (1.0 - flux.alpha) * jump;
    case FluxId::EntropyConserving: return jump / 6.0;
    case FluxId::Tadmor: return std::max(jump / 6.0, 0.0);
    case FluxId::EdRusanov: return jump / 6.0 + max_speed(ul, ur);
    case FluxId::EsRusanov: return max_speed(ul, ur);
  }
  throw std::logic_error("unhandled Burgers flux id");
}

double ec_condition_residual(const FluxChoice& flux, double ul, double ur) {
  return (entropy_variable(ur) - entropy_variable(ul)) * flux(ul, ur) -
         (entropy_potential(ur) - entropy_potential(ul));
}

}  // namespace sbpstab::burgers
