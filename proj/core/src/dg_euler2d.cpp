#include "sbpstab/dg_euler2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

namespace sbpstab {

using euler::kVariables;
using euler::Primitive;
using euler::State;

namespace {

constexpr double kWaveVx = 0.1;
constexpr double kWaveVy = 0.2;
constexpr double kWavePressure = 20.0;

void add_scaled(State& acc, double factor, const State& f) {
  for (size_t k = 0; k < acc.size(); ++k) acc[k] += factor * f[k];
}

}  // namespace

CrashError::CrashError(CrashReport report)
    : std::runtime_error("inadmissible " + report.variable + " (" +
                         std::to_string(report.value) + ") in element " +
                         std::to_string(report.element)),
      report_(std::move(report)) {}

State EulerField2D::state(int element, int i, int j) const {
  const Eigen::Index base = index(element, i, j, 0);
  return {values(base), values(base + 1), values(base + 2), values(base + 3)};
}

EulerDgsem2D::EulerDgsem2D(Mesh2D mesh, SbpOperators ops, EulerScheme scheme)
    : mesh_(mesh), ops_(std::move(ops)), scheme_(scheme) {
  if (mesh_.elements_x < 1 || mesh_.elements_y < 1) {
    throw std::invalid_argument("2D mesh needs at least one element per direction");
  }
}

int EulerDgsem2D::dofs() const {
  return mesh_.elements() * ops_.size() * ops_.size() * kVariables;
}

double EulerDgsem2D::node_x(int element, int i) const {
  const int ex = element % mesh_.elements_x;
  return mesh_.x_lo + mesh_.hx() * (ex + 0.5 * (ops_.nodes[static_cast<size_t>(i)] + 1.0));
}

double EulerDgsem2D::node_y(int element, int j) const {
  const int ey = element / mesh_.elements_x;
  return mesh_.y_lo + mesh_.hy() * (ey + 0.5 * (ops_.nodes[static_cast<size_t>(j)] + 1.0));
}

std::optional<CrashReport> EulerDgsem2D::find_inadmissible(const Vector& u) const {
  const int n = ops_.size();
  for (int e = 0; e < mesh_.elements(); ++e) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const Eigen::Index base = ((static_cast<Eigen::Index>(e) * n + j) * n + i) * kVariables;
        const State s{u(base), u(base + 1), u(base + 2), u(base + 3)};
        try {
          (void)euler::checked_primitive(s);
        } catch (const euler::InadmissibleState& err) {
          return CrashReport{0.0, e, i, j, err.variable(), err.value()};
        }
      }
    }
  }
  return std::nullopt;
}

Vector EulerDgsem2D::rhs(const Vector& u) const {
  if (u.size() != dofs()) throw std::invalid_argument("Euler state has wrong size");
  const int n = ops_.size();
  const int degree = ops_.degree;
  const int npe = n * n;
  const int ne = mesh_.elements();
  const auto node = [npe, n](int e, int i, int j) {
    return static_cast<size_t>(e * npe + j * n + i);
  };

  std::vector<Primitive> prim(static_cast<size_t>(ne * npe));
  for (int e = 0; e < ne; ++e) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const Eigen::Index base = static_cast<Eigen::Index>(node(e, i, j)) * kVariables;
        const State s{u(base), u(base + 1), u(base + 2), u(base + 3)};
        try {
          prim[node(e, i, j)] = euler::checked_primitive(s);
        } catch (const euler::InadmissibleState& err) {
          throw CrashError({std::numeric_limits<double>::quiet_NaN(), e, i, j,
                            err.variable(), err.value()});
        }
      }
    }
  }

  std::vector<State> acc_x(prim.size(), State{});
  std::vector<State> acc_y(prim.size(), State{});
  const Matrix& d = ops_.diff;

  // Volume terms: sum_m 2 D_im f#(u_i, u_m) along each line. The two-point
  // fluxes are symmetric, so each pair is evaluated once.
  for (int e = 0; e < ne; ++e) {
    for (int line = 0; line < n; ++line) {
      for (int i = 0; i < n; ++i) {
        const size_t ix = node(e, i, line);
        const size_t iy = node(e, line, i);
        add_scaled(acc_x[ix], 2.0 * d(i, i), euler::physical_flux(prim[ix], 0));
        add_scaled(acc_y[iy], 2.0 * d(i, i), euler::physical_flux(prim[iy], 1));
        for (int m = i + 1; m < n; ++m) {
          const size_t mx = node(e, m, line);
          const size_t my = node(e, line, m);
          const State fx = euler::two_point_flux(scheme_.volume, prim[ix], prim[mx], 0);
          add_scaled(acc_x[ix], 2.0 * d(i, m), fx);
          add_scaled(acc_x[mx], 2.0 * d(m, i), fx);
          const State fy = euler::two_point_flux(scheme_.volume, prim[iy], prim[my], 1);
          add_scaled(acc_y[iy], 2.0 * d(i, m), fy);
          add_scaled(acc_y[my], 2.0 * d(m, i), fy);
        }
      }
    }
  }

  // Surface terms M^-1 B (f* - f(u)) on each face, periodic neighbours.
  const double w_left = ops_.weights.front();
  const double w_right = ops_.weights.back();
  for (int ey = 0; ey < mesh_.elements_y; ++ey) {
    for (int ex = 0; ex < mesh_.elements_x; ++ex) {
      const int e = mesh_.element_index(ex, ey);
      const int west = mesh_.element_index((ex + mesh_.elements_x - 1) % mesh_.elements_x, ey);
      const int south = mesh_.element_index(ex, (ey + mesh_.elements_y - 1) % mesh_.elements_y);
      for (int line = 0; line < n; ++line) {
        {
          const size_t l = node(west, degree, line);
          const size_t r = node(e, 0, line);
          const State fstar = euler::two_point_flux(scheme_.surface, prim[l], prim[r], 0);
          const State fl = euler::physical_flux(prim[l], 0);
          const State fr = euler::physical_flux(prim[r], 0);
          for (size_t k = 0; k < fstar.size(); ++k) {
            acc_x[l][k] += (fstar[k] - fl[k]) / w_right;
            acc_x[r][k] -= (fstar[k] - fr[k]) / w_left;
          }
        }
        {
          const size_t l = node(south, line, degree);
          const size_t r = node(e, line, 0);
          const State fstar = euler::two_point_flux(scheme_.surface, prim[l], prim[r], 1);
          const State fl = euler::physical_flux(prim[l], 1);
          const State fr = euler::physical_flux(prim[r], 1);
          for (size_t k = 0; k < fstar.size(); ++k) {
            acc_y[l][k] += (fstar[k] - fl[k]) / w_right;
            acc_y[r][k] -= (fstar[k] - fr[k]) / w_left;
          }
        }
      }
    }
  }

  const double sx = 2.0 / mesh_.hx();
  const double sy = 2.0 / mesh_.hy();
  Vector du(u.size());
  for (size_t p = 0; p < prim.size(); ++p) {
    for (size_t k = 0; k < static_cast<size_t>(kVariables); ++k) {
      du(static_cast<Eigen::Index>(p * kVariables + k)) = -sx * acc_x[p][k] - sy * acc_y[p][k];
    }
  }
  return du;
}

RhsOperator EulerDgsem2D::as_operator() const {
  return [self = std::make_shared<const EulerDgsem2D>(*this)](const Vector& u) {
    return self->rhs(u);
  };
}

euler::State EulerDgsem2D::integrals(const Vector& u) const {
  const int n = ops_.size();
  const double jac = 0.25 * mesh_.hx() * mesh_.hy();
  State acc{};
  for (int e = 0; e < mesh_.elements(); ++e) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double w = jac * ops_.weights[static_cast<size_t>(i)] *
                         ops_.weights[static_cast<size_t>(j)];
        const Eigen::Index base = ((static_cast<Eigen::Index>(e) * n + j) * n + i) * kVariables;
        for (int k = 0; k < kVariables; ++k) acc[static_cast<size_t>(k)] += w * u(base + k);
      }
    }
  }
  return acc;
}

double EulerDgsem2D::total_entropy(const Vector& u) const {
  const int n = ops_.size();
  const double jac = 0.25 * mesh_.hx() * mesh_.hy();
  double acc = 0.0;
  for (int e = 0; e < mesh_.elements(); ++e) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const Eigen::Index base = ((static_cast<Eigen::Index>(e) * n + j) * n + i) * kVariables;
        acc += jac * ops_.weights[static_cast<size_t>(i)] * ops_.weights[static_cast<size_t>(j)] *
               euler::entropy({u(base), u(base + 1), u(base + 2), u(base + 3)});
      }
    }
  }
  return acc;
}

double EulerDgsem2D::entropy_rate(const Vector& u, const Vector& du) const {
  const int n = ops_.size();
  const double jac = 0.25 * mesh_.hx() * mesh_.hy();
  double acc = 0.0;
  for (int e = 0; e < mesh_.elements(); ++e) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const Eigen::Index base = ((static_cast<Eigen::Index>(e) * n + j) * n + i) * kVariables;
        const State w = euler::entropy_variables({u(base), u(base + 1), u(base + 2), u(base + 3)});
        double dot = 0.0;
        for (int k = 0; k < kVariables; ++k) dot += w[static_cast<size_t>(k)] * du(base + k);
        acc += jac * ops_.weights[static_cast<size_t>(i)] * ops_.weights[static_cast<size_t>(j)] * dot;
      }
    }
  }
  return acc;
}

double EulerDgsem2D::min_density(const Vector& u) const {
  double rho_min = std::numeric_limits<double>::infinity();
  for (Eigen::Index p = 0; p < u.size(); p += kVariables) rho_min = std::min(rho_min, u(p));
  return rho_min;
}

double EulerDgsem2D::max_wave_speed(const Vector& u) const {
  double lambda = 0.0;
  for (Eigen::Index p = 0; p < u.size(); p += kVariables) {
    const Primitive w = euler::checked_primitive({u(p), u(p + 1), u(p + 2), u(p + 3)});
    const double c = euler::sound_speed(w);
    lambda = std::max({lambda, std::abs(w.v1) + c, std::abs(w.v2) + c});
  }
  return lambda;
}

double density_wave_exact(double x, double y, double t, double amplitude) {
  return 1.0 + amplitude * std::sin(2.0 * std::numbers::pi *
                                    ((x - kWaveVx * t) + (y - kWaveVy * t)));
}

EulerField2D initialize_density_wave(const Mesh2D& mesh, int degree, double amplitude) {
  if (!(amplitude >= 0.0 && amplitude < 1.0)) {
    throw std::invalid_argument("density wave amplitude must lie in [0, 1)");
  }
  const EulerDgsem2D geometry(mesh, build_lgl_operators(degree), {});
  EulerField2D field{mesh, degree, Vector(geometry.dofs())};
  const int n = degree + 1;
  for (int e = 0; e < mesh.elements(); ++e) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double rho =
            density_wave_exact(geometry.node_x(e, i), geometry.node_y(e, j), 0.0, amplitude);
        const State s = euler::to_conserved({rho, kWaveVx, kWaveVy, kWavePressure});
        for (int k = 0; k < kVariables; ++k) {
          field.values(field.index(e, i, j, k)) = s[static_cast<size_t>(k)];
        }
      }
    }
  }
  return field;
}

double l2_error_density(const EulerField2D& field, double t, double amplitude,
                        std::optional<int> quadrature_degree) {
  const SbpOperators ops = build_lgl_operators(field.degree);
  const SbpOperators quad = build_lgl_operators(quadrature_degree.value_or(field.degree));
  const Matrix interp = interpolation_matrix(ops, quad.nodes);
  const int n = ops.size();
  const int nq = quad.size();
  const Mesh2D& mesh = field.mesh;
  const double jac = 0.25 * mesh.hx() * mesh.hy();

  double acc = 0.0;
  Matrix rho(n, n);
  for (int e = 0; e < mesh.elements(); ++e) {
    const int ex = e % mesh.elements_x;
    const int ey = e / mesh.elements_x;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) rho(i, j) = field.values(field.index(e, i, j, 0));
    }
    const Matrix rho_q = interp * rho * interp.transpose();
    for (int b = 0; b < nq; ++b) {
      const double y = mesh.y_lo + mesh.hy() * (ey + 0.5 * (quad.nodes[static_cast<size_t>(b)] + 1.0));
      for (int a = 0; a < nq; ++a) {
        const double x = mesh.x_lo + mesh.hx() * (ex + 0.5 * (quad.nodes[static_cast<size_t>(a)] + 1.0));
        const double err = rho_q(a, b) - density_wave_exact(x, y, t, amplitude);
        acc += jac * quad.weights[static_cast<size_t>(a)] * quad.weights[static_cast<size_t>(b)] * err * err;
      }
    }
  }
  return std::sqrt(acc);
}

}  // namespace sbpstab
