#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sbpstab::burgers {

// Entropy pair for f(u) = u^2/2 with the quadratic entropy.
inline double flux(double u) { return 0.5 * u * u; }
inline double entropy(double u) { return 0.5 * u * u; }
inline double entropy_flux(double u) { return u * u * u / 3.0; }
inline double entropy_variable(double u) { return u; }
inline double entropy_potential(double u) { return u * u * u / 6.0; }

enum class FluxId {
  Central,
  AlphaSplit,
  EntropyConserving,
  Tadmor,
  EdRusanov,
  EsRusanov,
};

std::string_view to_string(FluxId id);
std::optional<FluxId> parse_flux_id(std::string_view name);

double flux_central(double ul, double ur);
/// Throws std::invalid_argument for alpha outside [0, 1].
double flux_alpha_split(double ul, double ur, double alpha);
double flux_ec(double ul, double ur);
double flux_tadmor_positive(double ul, double ur);
double flux_ed_rusanov_type(double ul, double ur);
double flux_es_rusanov(double ul, double ur);

/// A surface or interface flux selection. `alpha` is used by AlphaSplit only.
struct FluxChoice {
  FluxId id = FluxId::Central;
  double alpha = 1.0;

  double operator()(double ul, double ur) const;
};

/// R in flux = central - R (ur - ul) / 2, with the analytic limit at ul == ur.
double dissipation_coefficient(const FluxChoice& flux, double ul, double ur);

/// (w_R - w_L) f - (Psi_R - Psi_L); zero for an entropy-conserving flux and
/// non-positive for an entropy-stable one.
double ec_condition_residual(const FluxChoice& flux, double ul, double ur);

}  // namespace sbpstab::burgers
