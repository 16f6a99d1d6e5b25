#include "sbpstab/dg_burgers.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sbpstab {

BurgersDgsem::BurgersDgsem(Mesh1D mesh, SbpOperators ops, BurgersScheme scheme)
    : mesh_(mesh), ops_(std::move(ops)), scheme_(scheme) {
  if (mesh_.elements < 1) throw std::invalid_argument("mesh needs >= 1 element");
  if (!(scheme_.alpha >= 0.0 && scheme_.alpha <= 1.0)) {
    throw std::invalid_argument("split parameter alpha must lie in [0, 1]");
  }
  q_ = ops_.mass() * ops_.diff;
}

void BurgersDgsem::volume_split(const double* u, double* out) const {
  const int n = ops_.size();
  const double alpha = scheme_.alpha;
  for (int i = 0; i < n; ++i) {
    double d_uu = 0.0;
    double d_u = 0.0;
    for (int m = 0; m < n; ++m) {
      d_uu += ops_.diff(i, m) * u[m] * u[m];
      d_u += ops_.diff(i, m) * u[m];
    }
    out[i] = alpha * 0.5 * d_uu + (1.0 - alpha) * u[i] * d_u;
  }
}

// Flux-point form of the volume term: out_i = (fbar_{i+1} - fbar_i) / w_i with
// fbar_i = sum_{k>=i} sum_{l<i} 2 Q_lk f#(u_l, u_k) for i = 1..N and the
// physical flux at both end points. The divergence-form fluxes (central f#)
// and the entropy-conserving ones are blended per flux point so that the
// entropy production (w_i - w_{i-1})(fbar - fbar_ec) is never positive.
void BurgersDgsem::volume_carpenter(const double* u, double* out) const {
  const int n = ops_.size();
  const int degree = ops_.degree;
  std::vector<double> fbar(static_cast<size_t>(n + 1));
  fbar[0] = burgers::flux(u[0]);
  fbar[static_cast<size_t>(n)] = burgers::flux(u[degree]);
  const double c2 = scheme_.carpenter_regularization * scheme_.carpenter_regularization;
  for (int i = 1; i <= degree; ++i) {
    double central = 0.0;
    double ec = 0.0;
    for (int k = i; k < n; ++k) {
      for (int l = 0; l < i; ++l) {
        const double q2 = 2.0 * q_(l, k);
        central += q2 * burgers::flux_central(u[l], u[k]);
        ec += q2 * burgers::flux_ec(u[l], u[k]);
      }
    }
    const double b = (burgers::entropy_variable(u[i]) -
                      burgers::entropy_variable(u[i - 1])) *
                     (ec - central);
    const double root = std::sqrt(b * b + c2);
    const double delta = root > 0.0 ? (root - b) / root : 1.0;
    fbar[static_cast<size_t>(i)] = central + delta * (ec - central);
  }
  for (int i = 0; i < n; ++i) {
    out[i] = (fbar[static_cast<size_t>(i + 1)] - fbar[static_cast<size_t>(i)]) /
             ops_.weights[static_cast<size_t>(i)];
  }
}

Vector BurgersDgsem::rhs(const Vector& u) const {
  if (u.size() != dofs()) throw std::invalid_argument("Burgers state has wrong size");
  const int n = ops_.size();
  const int degree = ops_.degree;
  const int elements = mesh_.elements;
  const double scale = 2.0 / mesh_.h();

  // Interface fluxes; face k sits between element k-1 and k (periodic).
  std::vector<double> face(static_cast<size_t>(elements));
  for (int k = 0; k < elements; ++k) {
    const int left = (k + elements - 1) % elements;
    face[static_cast<size_t>(k)] = scheme_.surface(u(left * n + degree), u(k * n));
  }

  Vector du(u.size());
  std::vector<double> vol(static_cast<size_t>(n));
  for (int k = 0; k < elements; ++k) {
    const double* uk = u.data() + static_cast<ptrdiff_t>(k * n);
    if (scheme_.carpenter_volume) {
      volume_carpenter(uk, vol.data());
    } else {
      volume_split(uk, vol.data());
    }
    const double f_left = face[static_cast<size_t>(k)];
    const double f_right = face[static_cast<size_t>((k + 1) % elements)];
    vol[0] -= (f_left - burgers::flux(uk[0])) / ops_.weights.front();
    vol[static_cast<size_t>(degree)] +=
        (f_right - burgers::flux(uk[degree])) / ops_.weights.back();
    for (int i = 0; i < n; ++i) du(k * n + i) = -scale * vol[static_cast<size_t>(i)];
  }
  return du;
}

RhsOperator BurgersDgsem::as_operator() const {
  return [self = std::make_shared<const BurgersDgsem>(*this)](const Vector& u) {
    return self->rhs(u);
  };
}

double BurgersDgsem::integral(const Vector& u) const {
  const int n = ops_.size();
  double acc = 0.0;
  for (int k = 0; k < mesh_.elements; ++k) {
    for (int i = 0; i < n; ++i) acc += ops_.weights[static_cast<size_t>(i)] * u(k * n + i);
  }
  return mesh_.jacobian() * acc;
}

double BurgersDgsem::entropy(const Vector& u) const {
  return 0.5 * entropy_rate(u, u);
}

double BurgersDgsem::l2_norm(const Vector& u) const { return std::sqrt(entropy_rate(u, u)); }

double BurgersDgsem::entropy_rate(const Vector& u, const Vector& du) const {
  const int n = ops_.size();
  double acc = 0.0;
  for (int k = 0; k < mesh_.elements; ++k) {
    for (int i = 0; i < n; ++i) {
      acc += ops_.weights[static_cast<size_t>(i)] * u(k * n + i) * du(k * n + i);
    }
  }
  return mesh_.jacobian() * acc;
}

BurgersField rhs_dgsem(const BurgersField& field, const BurgersScheme& scheme,
                       const SbpOperators& ops) {
  if (field.degree != ops.degree) {
    throw std::invalid_argument("field degree does not match operators");
  }
  const BurgersDgsem dg(field.mesh, ops, scheme);
  return {field.mesh, field.degree, dg.rhs(field.values)};
}

Vector rhs_fv(const Vector& averages, double h, const burgers::FluxChoice& flux) {
  const auto cells = averages.size();
  Vector du(cells);
  if (cells == 0) return du;
  // f_{i+1/2} between cell i and i+1.
  std::vector<double> f(static_cast<size_t>(cells));
  for (Eigen::Index i = 0; i < cells; ++i) {
    f[static_cast<size_t>(i)] = flux(averages(i), averages((i + 1) % cells));
  }
  for (Eigen::Index i = 0; i < cells; ++i) {
    const double left = f[static_cast<size_t>((i + cells - 1) % cells)];
    du(i) = -(f[static_cast<size_t>(i)] - left) / h;
  }
  return du;
}

LinearAdvectionDgsem::LinearAdvectionDgsem(Mesh1D mesh, SbpOperators ops,
                                           double velocity, double upwinding)
    : mesh_(mesh), ops_(std::move(ops)), velocity_(velocity), upwinding_(upwinding) {}

Vector LinearAdvectionDgsem::rhs(const Vector& u) const {
  if (u.size() != dofs()) throw std::invalid_argument("advection state has wrong size");
  const int n = ops_.size();
  const int degree = ops_.degree;
  const int elements = mesh_.elements;
  const double a = velocity_;
  const double scale = 2.0 / mesh_.h();
  std::vector<double> face(static_cast<size_t>(elements));
  for (int k = 0; k < elements; ++k) {
    const double ul = u(((k + elements - 1) % elements) * n + degree);
    const double ur = u(k * n);
    face[static_cast<size_t>(k)] =
        0.5 * a * (ul + ur) - 0.5 * std::abs(a) * upwinding_ * (ur - ul);
  }
  Vector du(u.size());
  for (int k = 0; k < elements; ++k) {
    const auto block = u.segment(k * n, n);
    Vector vol = a * (ops_.diff * block);
    vol(0) -= (face[static_cast<size_t>(k)] - a * block(0)) / ops_.weights.front();
    vol(degree) += (face[static_cast<size_t>((k + 1) % elements)] - a * block(degree)) /
                   ops_.weights.back();
    du.segment(k * n, n) = -scale * vol;
  }
  return du;
}

RhsOperator LinearAdvectionDgsem::as_operator() const {
  return [self = std::make_shared<const LinearAdvectionDgsem>(*this)](const Vector& u) {
    return self->rhs(u);
  };
}

RhsOperator make_inhomogeneous_rhs(RhsOperator base, const Vector& baseflow) {
  Vector source = base(baseflow);
  return [base = std::move(base), source = std::move(source)](const Vector& u) {
    return Vector(base(u) - source);
  };
}

}  // namespace sbpstab
