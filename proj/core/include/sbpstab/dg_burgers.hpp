#pragma once

#include <functional>
#include <memory>

#include "sbpstab/burgers_flux.hpp"
#include "sbpstab/sbp.hpp"

namespace sbpstab {

/// Semidiscrete right-hand side u -> du/dt on a flat state vector.
using RhsOperator = std::function<Vector(const Vector&)>;

struct BurgersScheme {
  /// Split parameter: 1 is divergence form, 2/3 the skew-symmetric form.
  double alpha = 1.0;
  burgers::FluxChoice surface{burgers::FluxId::Central, 1.0};
  /// Replaces the split volume term by the entropy-dissipative blend of the
  /// divergence-form and entropy-conserving flux-point fluxes.
  bool carpenter_volume = false;
  /// Regularization c in delta = (sqrt(b^2 + c^2) - b) / sqrt(b^2 + c^2).
  double carpenter_regularization = 1e-12;
};

/// Nodal values of a Burgers solution, element-major: values(k * (N+1) + i).
struct BurgersField {
  Mesh1D mesh;
  int degree = 1;
  Vector values;

  int nodes_per_element() const { return degree + 1; }
  double& at(int element, int node) { return values(element * (degree + 1) + node); }
  double at(int element, int node) const { return values(element * (degree + 1) + node); }
};

/// Split-form DGSEM for u_t + (u^2/2)_x = 0 on a periodic uniform mesh.
class BurgersDgsem {
 public:
  BurgersDgsem(Mesh1D mesh, SbpOperators ops, BurgersScheme scheme);

  const Mesh1D& mesh() const { return mesh_; }
  const SbpOperators& operators() const { return ops_; }
  const BurgersScheme& scheme() const { return scheme_; }
  int dofs() const { return mesh_.elements * ops_.size(); }

  /// Throws std::invalid_argument on a size mismatch.
  Vector rhs(const Vector& u) const;
  RhsOperator as_operator() const;

  /// Quadrature-weighted sum of u, i.e. the discrete integral.
  double integral(const Vector& u) const;
  /// Discrete entropy sum (h/2) w_i u_i^2 / 2.
  double entropy(const Vector& u) const;
  /// Discrete L2 norm sqrt(sum (h/2) w_i u_i^2).
  double l2_norm(const Vector& u) const;
  /// Time derivative of the discrete entropy, u^T M du.
  double entropy_rate(const Vector& u, const Vector& du) const;

 private:
  void volume_split(const double* u, double* out) const;
  void volume_carpenter(const double* u, double* out) const;

  Mesh1D mesh_;
  SbpOperators ops_;
  BurgersScheme scheme_;
  Matrix q_;  // M D
};

BurgersField rhs_dgsem(const BurgersField& field, const BurgersScheme& scheme,
                       const SbpOperators& ops);

/// First-order finite-volume residual -(f_{i+1/2} - f_{i-1/2}) / h on a
/// periodic array of cell averages.
Vector rhs_fv(const Vector& averages, double h, const burgers::FluxChoice& flux);

/// DGSEM for linear advection u_t + a u_x = 0 with the flux
/// a{u} - |a| sigma [u] / 2 (sigma = 0 central, 1 upwind).
class LinearAdvectionDgsem {
 public:
  LinearAdvectionDgsem(Mesh1D mesh, SbpOperators ops, double velocity,
                       double upwinding = 0.0);

  int dofs() const { return mesh_.elements * ops_.size(); }
  Vector rhs(const Vector& u) const;
  RhsOperator as_operator() const;

 private:
  Mesh1D mesh_;
  SbpOperators ops_;
  double velocity_;
  double upwinding_;
};

/// Returns u -> rhs(u) - rhs(baseflow), with rhs(baseflow) evaluated once.
RhsOperator make_inhomogeneous_rhs(RhsOperator base, const Vector& baseflow);

}  // namespace sbpstab
