#include "sbpstab/euler_flux.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sbpstab::euler {

namespace {

constexpr double kLogMeanThreshold = 1e-4;

// F = atanh(f)/f with f = (b - a)/(b + a), so that log_mean = (a + b) / (2F).
double log_mean_factor(double a, double b) {
  const double f = (b - a) / (b + a);
  if (std::abs(f) < kLogMeanThreshold) {
    const double u = f * f;
    return 1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0)));
  }
  return std::atanh(f) / f;
}

}  // namespace

InadmissibleState::InadmissibleState(std::string variable, double value)
    : std::runtime_error("inadmissible state: " + variable + " = " +
                         std::to_string(value)),
      variable_(std::move(variable)),
      value_(value) {}

Primitive to_primitive(const State& u) {
  const double rho = u[0];
  const double v1 = u[1] / rho;
  const double v2 = u[2] / rho;
  const double p = (kGamma - 1.0) * (u[3] - 0.5 * rho * (v1 * v1 + v2 * v2));
  return {rho, v1, v2, p};
}

State to_conserved(const Primitive& w) {
  return {w.rho, w.rho * w.v1, w.rho * w.v2,
          w.p / (kGamma - 1.0) + 0.5 * w.rho * (w.v1 * w.v1 + w.v2 * w.v2)};
}

double pressure(const State& u) { return to_primitive(u).p; }

double sound_speed(const Primitive& w) { return std::sqrt(kGamma * w.p / w.rho); }

Primitive checked_primitive(const State& u) {
  if (!(u[0] > 0.0) || !std::isfinite(u[0])) throw InadmissibleState("density", u[0]);
  const Primitive w = to_primitive(u);
  if (!(w.p > 0.0) || !std::isfinite(w.p)) throw InadmissibleState("pressure", w.p);
  return w;
}

bool admissible(const State& u) {
  if (!(u[0] > 0.0) || !std::isfinite(u[0])) return false;
  const double p = pressure(u);
  return p > 0.0 && std::isfinite(p);
}

State physical_flux(const Primitive& w, int direction) {
  const double vn = w.velocity(direction);
  const double rho_e = w.p / (kGamma - 1.0) + 0.5 * w.rho * (w.v1 * w.v1 + w.v2 * w.v2);
  const double mass = w.rho * vn;
  State f{mass, mass * w.v1, mass * w.v2, (rho_e + w.p) * vn};
  f[static_cast<size_t>(1 + direction)] += w.p;
  return f;
}

State physical_flux(const State& u, int direction) {
  return physical_flux(checked_primitive(u), direction);
}

double thermodynamic_entropy(const State& u) {
  const Primitive w = checked_primitive(u);
  return std::log(w.p) - kGamma * std::log(w.rho);
}

double entropy(const State& u) {
  return -u[0] * thermodynamic_entropy(u) / (kGamma - 1.0);
}

double entropy_flux(const State& u, int direction) {
  const Primitive w = checked_primitive(u);
  return entropy(u) * w.velocity(direction);
}

State entropy_variables(const State& u) {
  const Primitive w = checked_primitive(u);
  const double s = std::log(w.p) - kGamma * std::log(w.rho);
  const double rho_p = w.rho / w.p;
  return {(kGamma - s) / (kGamma - 1.0) - 0.5 * rho_p * (w.v1 * w.v1 + w.v2 * w.v2),
          rho_p * w.v1, rho_p * w.v2, -rho_p};
}

double entropy_potential(const State& u, int direction) {
  return u[static_cast<size_t>(1 + direction)];
}

double log_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("log_mean needs positive arguments");
  }
  return 0.5 * (a + b) / log_mean_factor(a, b);
}

State flux_central(const Primitive& l, const Primitive& r, int direction) {
  const State fl = physical_flux(l, direction);
  const State fr = physical_flux(r, direction);
  State f;
  for (size_t k = 0; k < f.size(); ++k) f[k] = 0.5 * (fl[k] + fr[k]);
  return f;
}

State flux_chandrashekar(const Primitive& l, const Primitive& r, int direction) {
  // beta = rho / (2p) is proportional to the inverse temperature.
  const double beta_l = 0.5 * l.rho / l.p;
  const double beta_r = 0.5 * r.rho / r.p;

  const double rho_ln = log_mean(l.rho, r.rho);
  const double beta_ln = log_mean(beta_l, beta_r);
  const double rho_avg = 0.5 * (l.rho + r.rho);
  const double beta_avg = 0.5 * (beta_l + beta_r);
  const double v1_avg = 0.5 * (l.v1 + r.v1);
  const double v2_avg = 0.5 * (l.v2 + r.v2);
  const double v_sq_avg = 0.5 * (l.v1 * l.v1 + r.v1 * r.v1 + l.v2 * l.v2 + r.v2 * r.v2);
  const double p_hat = 0.5 * rho_avg / beta_avg;

  const double vn_avg = direction == 0 ? v1_avg : v2_avg;
  State f;
  f[0] = rho_ln * vn_avg;
  f[1] = f[0] * v1_avg;
  f[2] = f[0] * v2_avg;
  f[static_cast<size_t>(1 + direction)] += p_hat;
  f[3] = f[0] * (0.5 / ((kGamma - 1.0) * beta_ln) - 0.5 * v_sq_avg) +
         v1_avg * f[1] + v2_avg * f[2];
  return f;
}

State flux_kennedy_gruber(const Primitive& l, const Primitive& r, int direction) {
  const double rho_avg = 0.5 * (l.rho + r.rho);
  const double v1_avg = 0.5 * (l.v1 + r.v1);
  const double v2_avg = 0.5 * (l.v2 + r.v2);
  const double p_avg = 0.5 * (l.p + r.p);
  // Specific total energy E = p / ((gamma-1) rho) + |v|^2 / 2.
  const double e_l = l.p / ((kGamma - 1.0) * l.rho) + 0.5 * (l.v1 * l.v1 + l.v2 * l.v2);
  const double e_r = r.p / ((kGamma - 1.0) * r.rho) + 0.5 * (r.v1 * r.v1 + r.v2 * r.v2);
  const double e_avg = 0.5 * (e_l + e_r);
  const double vn_avg = direction == 0 ? v1_avg : v2_avg;

  State f;
  f[0] = rho_avg * vn_avg;
  f[1] = f[0] * v1_avg;
  f[2] = f[0] * v2_avg;
  f[static_cast<size_t>(1 + direction)] += p_avg;
  f[3] = (rho_avg * e_avg + p_avg) * vn_avg;
  return f;
}

namespace {

double wave_speed(const Primitive& w, int direction) {
  return std::abs(w.velocity(direction)) + sound_speed(w);
}

}  // namespace

State flux_rusanov(const Primitive& l, const Primitive& r, int direction) {
  const double lambda = std::max(wave_speed(l, direction), wave_speed(r, direction));
  const State ul = to_conserved(l);
  const State ur = to_conserved(r);
  State f = flux_central(l, r, direction);
  for (size_t k = 0; k < f.size(); ++k) f[k] -= 0.5 * lambda * (ur[k] - ul[k]);
  return f;
}

State flux_central(const State& ul, const State& ur, int direction) {
  return flux_central(checked_primitive(ul), checked_primitive(ur), direction);
}

State flux_chandrashekar(const State& ul, const State& ur, int direction) {
  return flux_chandrashekar(checked_primitive(ul), checked_primitive(ur), direction);
}

State flux_kennedy_gruber(const State& ul, const State& ur, int direction) {
  return flux_kennedy_gruber(checked_primitive(ul), checked_primitive(ur), direction);
}

State flux_rusanov(const State& ul, const State& ur, int direction) {
  return flux_rusanov(checked_primitive(ul), checked_primitive(ur), direction);
}

double max_wave_speed(const State& ul, const State& ur, int direction) {
  return std::max(wave_speed(checked_primitive(ul), direction),
                  wave_speed(checked_primitive(ur), direction));
}

double mass_dissipation_coefficient_ec(const State& ul, const State& ur) {
  const Primitive l = checked_primitive(ul);
  const Primitive r = checked_primitive(ur);
  const double jump_v = r.v1 - l.v1;
  if (l.rho == r.rho) return 0.5 * jump_v;
  // {rho} - rho_ln = {rho} (F - 1) / F.
  const double factor = log_mean_factor(l.rho, r.rho);
  const double rho_avg = 0.5 * (l.rho + r.rho);
  const double v_avg = 0.5 * (l.v1 + r.v1);
  return rho_avg * (factor - 1.0) / factor * 2.0 * v_avg / (r.rho - l.rho) +
         0.5 * jump_v;
}

namespace {

constexpr std::array<std::pair<FluxId, std::string_view>, 4> kNames{{
    {FluxId::Central, "euler-central"},
    {FluxId::Chandrashekar, "euler-ec-chandrashekar"},
    {FluxId::KennedyGruber, "euler-kg"},
    {FluxId::Rusanov, "euler-rusanov"},
}};

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

State two_point_flux(FluxId id, const Primitive& l, const Primitive& r, int direction) {
  switch (id) {
    case FluxId::Central: return flux_central(l, r, direction);
    case FluxId::Chandrashekar: return flux_chandrashekar(l, r, direction);
    case FluxId::KennedyGruber: return flux_kennedy_gruber(l, r, direction);
    case FluxId::Rusanov: return flux_rusanov(l, r, direction);
  }
  throw std::logic_error("unhandled Euler flux id");
}

State two_point_flux(FluxId id, const State& ul, const State& ur, int direction) {
  return two_point_flux(id, checked_primitive(ul), checked_primitive(ur), direction);
}

double ec_condition_residual(FluxId id, const State& ul, const State& ur,
                             int direction) {
  const State f = two_point_flux(id, ul, ur, direction);
  const State wl = entropy_variables(ul);
  const State wr = entropy_variables(ur);
  double acc = 0.0;
  for (size_t k = 0; k < f.size(); ++k) acc += (wr[k] - wl[k]) * f[k];
  return acc - (entropy_potential(ur, direction) - entropy_potential(ul, direction));
}

}  // namespace sbpstab::euler
