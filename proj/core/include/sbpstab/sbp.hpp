#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace sbpstab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Legendre-Gauss-Lobatto collocation operators for one polynomial degree.
///
/// The diagonal mass matrix M = diag(weights), the differentiation matrix D
/// and B = diag(-1, 0, ..., 0, 1) satisfy M D + (M D)^T = B.
struct SbpOperators {
  int degree = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  /// Barycentric weights of the nodal Lagrange basis.
  std::vector<double> barycentric;
  Matrix diff;

  int size() const { return degree + 1; }
  Matrix mass() const;
  Matrix boundary() const;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value of the Legendre polynomial P_n and its derivative at x.
struct LegendreValue {
  double p;
  double dp;
};
LegendreValue legendre(int n, double x);

/// Builds the LGL operator set of degree N >= 1.
///
/// Nodes are the roots of (1-x^2) P'_N(x), found by Newton iteration from
/// Chebyshev-Gauss-Lobatto guesses. Throws std::invalid_argument for N < 1
/// and NumericalFailure if the iteration does not converge.
SbpOperators build_lgl_operators(int degree);

/// Lagrange interpolation matrix from the nodes of `ops` to the points `x`.
Matrix interpolation_matrix(const SbpOperators& ops, std::span<const double> x);

/// Uniform periodic 1D mesh.
struct Mesh1D {
  int elements = 1;
  double x_lo = -1.0;
  double x_hi = 1.0;

  double h() const { return (x_hi - x_lo) / elements; }
  double jacobian() const { return 0.5 * h(); }
  /// Physical coordinate of reference point xi in element k.
  double map(int element, double xi) const {
    return x_lo + h() * (element + 0.5 * (xi + 1.0));
  }
};

/// Physical coordinates of every node, element-major.
Vector node_coordinates(const Mesh1D& mesh, const SbpOperators& ops);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with `points` >= 1 nodes, exact to degree 2 points - 1.
QuadratureRule gauss_legendre_rule(int points);

enum class ProjectionKind {
  /// Discrete L2 projection with the (target + 1)-point Gauss rule; the same
  /// as interpolating at the Gauss points of the target degree.
  GaussL2,
  /// Discrete L2 projection with an LGL rule (the working rule for nodal
  /// fields, or degree `quadrature_degree` for functions).
  LobattoL2,
  /// Linear interpolation of the two element endpoint values (target 1 only).
  EndpointInterpolation,
};

std::string_view to_string(ProjectionKind kind);
std::optional<ProjectionKind> parse_projection_kind(std::string_view name);

/// Per-element reduction of a nodal field (degree `ops.degree`, element-major)
/// onto polynomials of degree `target_degree`, evaluated back at the nodes.
Vector project_to_degree(const SbpOperators& ops, std::span<const double> values,
                         int target_degree,
                         ProjectionKind kind = ProjectionKind::GaussL2);

/// Same reduction applied to a function sampled at the rule of `kind`.
/// `quadrature_degree` (>= ops.degree) only affects LobattoL2 and
/// EndpointInterpolation.
template <typename F>
Vector project_function(const Mesh1D& mesh, const SbpOperators& ops, F&& f,
                        int target_degree, int quadrature_degree,
                        ProjectionKind kind = ProjectionKind::GaussL2);

namespace detail {
QuadratureRule projection_rule(const SbpOperators& ops, int target_degree,
                               int quadrature_degree, ProjectionKind kind);
Vector project_samples(const SbpOperators& ops, const QuadratureRule& rule,
                       std::span<const double> samples, int elements,
                       int target_degree, ProjectionKind kind);
}  // namespace detail

template <typename F>
Vector project_function(const Mesh1D& mesh, const SbpOperators& ops, F&& f,
                        int target_degree, int quadrature_degree,
                        ProjectionKind kind) {
  const QuadratureRule rule =
      detail::projection_rule(ops, target_degree, quadrature_degree, kind);
  std::vector<double> samples;
  samples.reserve(static_cast<size_t>(mesh.elements) * rule.nodes.size());
  for (int k = 0; k < mesh.elements; ++k) {
    for (double xi : rule.nodes) {
      samples.push_back(f(mesh.map(k, xi)));
    }
  }
  return detail::project_samples(ops, rule, samples, mesh.elements,
                                 target_degree, kind);
}

}  // namespace sbpstab
