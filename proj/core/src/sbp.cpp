#include "sbpstab/sbp.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sbpstab {

namespace {

constexpr int kNewtonMaxIterations = 100;
constexpr double kNewtonTolerance = 1e-15;

// q(x) = (1-x^2) P'_N(x) and its derivative. Uses the Legendre ODE
// ((1-x^2) P')' = -N(N+1) P.
struct LobattoValue {
  double q;
  double dq;
};

LobattoValue lobatto_polynomial(int n, double x) {
  const LegendreValue lv = legendre(n, x);
  return {(1.0 - x * x) * lv.dp, -static_cast<double>(n) * (n + 1) * lv.p};
}

}  // namespace

Matrix SbpOperators::mass() const {
  Matrix m = Matrix::Zero(size(), size());
  for (int i = 0; i < size(); ++i) m(i, i) = weights[static_cast<size_t>(i)];
  return m;
}

Matrix SbpOperators::boundary() const {
  Matrix b = Matrix::Zero(size(), size());
  b(0, 0) = -1.0;
  b(degree, degree) = 1.0;
  return b;
}

LegendreValue legendre(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p_prev = 1.0;
  double p = x;
  double dp_prev = 0.0;
  double dp = 1.0;
  for (int k = 2; k <= n; ++k) {
    const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
    const double dp_next = dp_prev + (2.0 * k - 1.0) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp};
}

SbpOperators build_lgl_operators(int degree) {
  if (degree < 1) {
    throw std::invalid_argument("LGL operators need degree >= 1, got " +
                                std::to_string(degree));
  }
  SbpOperators ops;
  ops.degree = degree;
  const int n = degree + 1;
  ops.nodes.assign(static_cast<size_t>(n), 0.0);
  ops.nodes.front() = -1.0;
  ops.nodes.back() = 1.0;

  // Interior nodes; symmetric, so solve the left half and mirror.
  for (int i = 1; i <= degree / 2; ++i) {
    double x = -std::cos(std::numbers::pi * i / degree);
    bool converged = false;
    for (int it = 0; it < kNewtonMaxIterations; ++it) {
      const LobattoValue v = lobatto_polynomial(degree, x);
      const double dx = v.q / v.dq;
      x -= dx;
      if (std::abs(dx) <= kNewtonTolerance * (1.0 + std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NumericalFailure("LGL Newton iteration did not converge for N=" +
                             std::to_string(degree));
    }
    ops.nodes[static_cast<size_t>(i)] = x;
    ops.nodes[static_cast<size_t>(degree - i)] = -x;
  }
  if (degree % 2 == 0) ops.nodes[static_cast<size_t>(degree / 2)] = 0.0;

  ops.weights.resize(static_cast<size_t>(n));
  const double scale = 2.0 / (static_cast<double>(degree) * (degree + 1));
  for (int i = 0; i < n; ++i) {
    const double p = legendre(degree, ops.nodes[static_cast<size_t>(i)]).p;
    ops.weights[static_cast<size_t>(i)] = scale / (p * p);
  }

  ops.barycentric.assign(static_cast<size_t>(n), 1.0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k != j) {
        ops.barycentric[static_cast<size_t>(j)] /=
            ops.nodes[static_cast<size_t>(j)] - ops.nodes[static_cast<size_t>(k)];
      }
    }
  }

  // D_ij = (w_j / w_i) / (x_i - x_j), diagonal by negative row sum.
  ops.diff = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = (ops.barycentric[static_cast<size_t>(j)] /
                        ops.barycentric[static_cast<size_t>(i)]) /
                       (ops.nodes[static_cast<size_t>(i)] -
                        ops.nodes[static_cast<size_t>(j)]);
      ops.diff(i, j) = d;
      row_sum += d;
    }
    ops.diff(i, i) = -row_sum;
  }
  return ops;
}

Matrix interpolation_matrix(const SbpOperators& ops, std::span<const double> x) {
  const int n = ops.size();
  Matrix v = Matrix::Zero(static_cast<Eigen::Index>(x.size()), n);
  for (size_t r = 0; r < x.size(); ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    int exact = -1;
    for (int j = 0; j < n; ++j) {
      if (x[r] == ops.nodes[static_cast<size_t>(j)]) exact = j;
    }
    if (exact >= 0) {
      v(row, exact) = 1.0;
      continue;
    }
    double denom = 0.0;
    for (int j = 0; j < n; ++j) {
      const double t = ops.barycentric[static_cast<size_t>(j)] /
                       (x[r] - ops.nodes[static_cast<size_t>(j)]);
      v(row, j) = t;
      denom += t;
    }
    v.row(row) /= denom;
  }
  return v;
}

Vector node_coordinates(const Mesh1D& mesh, const SbpOperators& ops) {
  Vector x(mesh.elements * ops.size());
  for (int k = 0; k < mesh.elements; ++k) {
    for (int i = 0; i < ops.size(); ++i) {
      x(k * ops.size() + i) = mesh.map(k, ops.nodes[static_cast<size_t>(i)]);
    }
  }
  return x;
}

QuadratureRule gauss_legendre_rule(int points) {
  if (points < 1) throw std::invalid_argument("Gauss rule needs at least one point");
  QuadratureRule rule;
  const auto n = static_cast<size_t>(points);
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double x = -std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    bool converged = false;
    for (int it = 0; it < kNewtonMaxIterations; ++it) {
      const LegendreValue v = legendre(points, x);
      const double dx = v.p / v.dp;
      x -= dx;
      if (std::abs(dx) <= kNewtonTolerance * (1.0 + std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NumericalFailure("Gauss Newton iteration did not converge for n=" +
                             std::to_string(points));
    }
    const double dp = legendre(points, x).dp;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = x;
    rule.nodes[n - 1 - static_cast<size_t>(i)] = -x;
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[n - 1 - static_cast<size_t>(i)] = w;
  }
  if (points % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::string_view to_string(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::GaussL2: return "gauss-l2";
    case ProjectionKind::LobattoL2: return "lobatto-l2";
    case ProjectionKind::EndpointInterpolation: return "endpoint";
  }
  return "gauss-l2";
}

std::optional<ProjectionKind> parse_projection_kind(std::string_view name) {
  if (name == "gauss-l2") return ProjectionKind::GaussL2;
  if (name == "lobatto-l2") return ProjectionKind::LobattoL2;
  if (name == "endpoint") return ProjectionKind::EndpointInterpolation;
  return std::nullopt;
}

namespace detail {

QuadratureRule projection_rule(const SbpOperators& ops, int target_degree,
                               int quadrature_degree, ProjectionKind kind) {
  if (target_degree < 0 || target_degree > ops.degree) {
    throw std::invalid_argument("projection target degree must lie in [0, N]");
  }
  if (kind == ProjectionKind::GaussL2) return gauss_legendre_rule(target_degree + 1);
  if (quadrature_degree < ops.degree) {
    throw std::invalid_argument("quadrature degree below working degree");
  }
  const SbpOperators quad = build_lgl_operators(quadrature_degree);
  return {quad.nodes, quad.weights};
}

Vector project_samples(const SbpOperators& ops, const QuadratureRule& rule,
                       std::span<const double> samples, int elements,
                       int target_degree, ProjectionKind kind) {
  if (target_degree < 0 || target_degree > ops.degree) {
    throw std::invalid_argument("projection target degree must lie in [0, N]");
  }
  if (kind == ProjectionKind::EndpointInterpolation && target_degree != 1) {
    throw std::invalid_argument("endpoint interpolation needs target degree 1");
  }
  const int nq = static_cast<int>(rule.nodes.size());
  const int n = ops.size();
  if (samples.size() != static_cast<size_t>(elements * nq)) {
    throw std::invalid_argument("sample count does not match mesh");
  }
  Vector out(elements * n);
  for (int k = 0; k < elements; ++k) {
    const double* f = samples.data() + static_cast<ptrdiff_t>(k * nq);
    if (kind == ProjectionKind::EndpointInterpolation) {
      const double left = f[0];
      const double right = f[nq - 1];
      for (int i = 0; i < n; ++i) {
        const double xi = ops.nodes[static_cast<size_t>(i)];
        out(k * n + i) = 0.5 * (1.0 - xi) * left + 0.5 * (1.0 + xi) * right;
      }
      continue;
    }
    // Legendre modes are discretely orthogonal up to the rule's degree, so
    // c_j = sum_q w_q f_q P_j(x_q) / sum_q w_q P_j(x_q)^2. The discrete norm
    // differs from 2/(2j+1) when j equals the LGL rule's degree.
    std::vector<double> coeff(static_cast<size_t>(target_degree + 1), 0.0);
    for (int j = 0; j <= target_degree; ++j) {
      double acc = 0.0;
      double norm = 0.0;
      for (int q = 0; q < nq; ++q) {
        const double w = rule.weights[static_cast<size_t>(q)];
        const double pj = legendre(j, rule.nodes[static_cast<size_t>(q)]).p;
        acc += w * f[q] * pj;
        norm += w * pj * pj;
      }
      coeff[static_cast<size_t>(j)] = acc / norm;
    }
    for (int i = 0; i < n; ++i) {
      double v = 0.0;
      for (int j = 0; j <= target_degree; ++j) {
        v += coeff[static_cast<size_t>(j)] *
             legendre(j, ops.nodes[static_cast<size_t>(i)]).p;
      }
      out(k * n + i) = v;
    }
  }
  return out;
}

}  // namespace detail

Vector project_to_degree(const SbpOperators& ops, std::span<const double> values,
                         int target_degree, ProjectionKind kind) {
  if (values.size() % static_cast<size_t>(ops.size()) != 0) {
    throw std::invalid_argument("nodal field size is not a multiple of N+1");
  }
  const int elements = static_cast<int>(values.size()) / ops.size();
  if (kind != ProjectionKind::GaussL2) {
    return detail::project_samples(ops, {ops.nodes, ops.weights}, values, elements,
                                   target_degree, kind);
  }
  const QuadratureRule rule = detail::projection_rule(ops, target_degree, ops.degree, kind);
  const Matrix to_rule = interpolation_matrix(ops, rule.nodes);
  const int n = ops.size();
  std::vector<double> samples;
  samples.reserve(static_cast<size_t>(elements) * rule.nodes.size());
  for (int k = 0; k < elements; ++k) {
    const Eigen::Map<const Vector> local(values.data() + static_cast<ptrdiff_t>(k * n), n);
    const Vector at_rule = to_rule * local;
    samples.insert(samples.end(), at_rule.data(), at_rule.data() + at_rule.size());
  }
  return detail::project_samples(ops, rule, samples, elements, target_degree, kind);
}

}  // namespace sbpstab
