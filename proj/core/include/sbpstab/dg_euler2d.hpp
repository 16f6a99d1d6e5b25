#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sbpstab/dg_burgers.hpp"
#include "sbpstab/euler_flux.hpp"
#include "sbpstab/sbp.hpp"

namespace sbpstab {

/// Uniform periodic Cartesian mesh on [x_lo, x_hi] x [y_lo, y_hi].
struct Mesh2D {
  int elements_x = 1;
  int elements_y = 1;
  double x_lo = -1.0;
  double x_hi = 1.0;
  double y_lo = -1.0;
  double y_hi = 1.0;

  int elements() const { return elements_x * elements_y; }
  double hx() const { return (x_hi - x_lo) / elements_x; }
  double hy() const { return (y_hi - y_lo) / elements_y; }
  int element_index(int ex, int ey) const { return ey * elements_x + ex; }
};

/// First inadmissible state met during a run.
struct CrashReport {
  double time = 0.0;
  int element = -1;
  int node_i = -1;
  int node_j = -1;
  std::string variable;
  double value = 0.0;
};

/// Raised by the Euler operator when a nodal state has rho <= 0 or p <= 0.
/// The report's time is filled in by whoever owns the clock.
class CrashError : public std::runtime_error {
 public:
  explicit CrashError(CrashReport report);
  const CrashReport& report() const { return report_; }

 private:
  CrashReport report_;
};

/// Conserved variables at tensor LGL nodes. Flat layout:
/// ((element * (N+1)^2 + j * (N+1) + i) * 4 + variable), i along x.
struct EulerField2D {
  Mesh2D mesh;
  int degree = 1;
  Vector values;

  int nodes_per_element() const { return (degree + 1) * (degree + 1); }
  Eigen::Index index(int element, int i, int j, int variable) const {
    return ((static_cast<Eigen::Index>(element) * nodes_per_element() + j * (degree + 1) + i) *
            euler::kVariables) + variable;
  }
  euler::State state(int element, int i, int j) const;
};

struct EulerScheme {
  euler::FluxId volume = euler::FluxId::Central;
  euler::FluxId surface = euler::FluxId::Central;
};

/// Flux-differencing DGSEM for the 2D compressible Euler equations.
///
/// Per element and node the x-contribution is
///   -(2/hx) [ sum_m 2 D_im f#(u_ij, u_mj) + (M^-1 B (f* - f(u)))_i ],
/// and likewise in y. With the central volume flux this is the
/// divergence-form DGSEM.
class EulerDgsem2D {
 public:
  EulerDgsem2D(Mesh2D mesh, SbpOperators ops, EulerScheme scheme);

  const Mesh2D& mesh() const { return mesh_; }
  const SbpOperators& operators() const { return ops_; }
  const EulerScheme& scheme() const { return scheme_; }
  int degree() const { return ops_.degree; }
  int dofs() const;

  /// Throws CrashError on an inadmissible node and std::invalid_argument on a
  /// size mismatch.
  Vector rhs(const Vector& u) const;
  RhsOperator as_operator() const;

  /// First inadmissible node of u, if any.
  std::optional<CrashReport> find_inadmissible(const Vector& u) const;

  /// Quadrature-weighted integral of each conserved variable.
  euler::State integrals(const Vector& u) const;
  /// Quadrature-weighted total entropy.
  double total_entropy(const Vector& u) const;
  /// Quadrature-weighted sum of w(u) . du.
  double entropy_rate(const Vector& u, const Vector& du) const;
  double min_density(const Vector& u) const;
  /// max over nodes and directions of |v_d| + c.
  double max_wave_speed(const Vector& u) const;

  /// Node coordinates (x, y) for element e, node (i, j).
  double node_x(int element, int i) const;
  double node_y(int element, int j) const;

 private:
  Mesh2D mesh_;
  SbpOperators ops_;
  EulerScheme scheme_;
};

/// rho = 1 + A sin(2 pi (x + y)), v = (0.1, 0.2), p = 20 at the nodes.
/// Throws std::invalid_argument unless 0 <= A < 1.
EulerField2D initialize_density_wave(const Mesh2D& mesh, int degree, double amplitude);

/// Exact density of the advected wave at time t.
double density_wave_exact(double x, double y, double t, double amplitude);

/// Quadrature-weighted L2 norm of rho_h - rho_exact(t).
///
/// With `quadrature_degree` unset the nodal values are compared on the LGL
/// nodes of the field. Otherwise the nodal polynomial is interpolated to a
/// tensor LGL rule of the given degree, which also sees the interpolation
/// error of the initial data.
double l2_error_density(const EulerField2D& field, double t, double amplitude,
                        std::optional<int> quadrature_degree = std::nullopt);

}  // namespace sbpstab
