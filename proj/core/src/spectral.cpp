#include "sbpstab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <lapacke.h>

namespace sbpstab {

namespace {

constexpr int kInverseIterations = 4;
constexpr double kDefectiveResidual = 1e-6;

}  // namespace

JacobianColumnError::JacobianColumnError(Eigen::Index column, const std::string& what)
    : std::runtime_error("rhs failed for Jacobian column " + std::to_string(column) +
                         ": " + what),
      column_(column) {}

Matrix fd_jacobian(const RhsOperator& rhs, const Vector& baseflow, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  if (!baseflow.allFinite()) throw std::invalid_argument("baseflow is not finite");
  const Eigen::Index n = baseflow.size();
  Matrix jac(n, n);
  Vector probe = baseflow;
  for (Eigen::Index j = 0; j < n; ++j) {
    try {
      // Divide by the step that was actually represented, not by 2 eps.
      const double hi = baseflow(j) + eps;
      const double lo = baseflow(j) - eps;
      probe(j) = hi;
      const Vector plus = rhs(probe);
      probe(j) = lo;
      const Vector minus = rhs(probe);
      probe(j) = baseflow(j);
      jac.col(j) = (plus - minus) / (hi - lo);
    } catch (const std::exception& err) {
      throw JacobianColumnError(j, err.what());
    }
  }
  return jac;
}

std::size_t SpectrumReport::numerically_zero_count() const {
  std::size_t count = 0;
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) count += numerically_zero(k) ? 1 : 0;
  return count;
}

SpectrumReport eigenspectrum(const Matrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("matrix must be square");
  const auto n = static_cast<lapack_int>(matrix.rows());
  SpectrumReport report;
  if (n == 0) return report;
  Matrix work = matrix;  // dgeev overwrites its input
  std::vector<double> wr(static_cast<size_t>(n));
  std::vector<double> wi(static_cast<size_t>(n));
  const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n,
                                        wr.data(), wi.data(), nullptr, 1, nullptr, 1);
  if (info != 0) {
    throw EigensolverError("dgeev failed with info = " + std::to_string(info));
  }
  report.eigenvalues.reserve(static_cast<size_t>(n));
  for (size_t k = 0; k < static_cast<size_t>(n); ++k) report.eigenvalues.emplace_back(wr[k], wi[k]);
  // Ties (conjugate pairs) resolve to the member with positive imaginary part.
  for (size_t k = 1; k < report.eigenvalues.size(); ++k) {
    const auto& cur = report.eigenvalues[k];
    const auto& best = report.eigenvalues[report.argmax];
    if (cur.real() > best.real() || (cur.real() == best.real() && cur.imag() > best.imag())) {
      report.argmax = k;
    }
  }
  report.max_real_part = report.eigenvalues[report.argmax].real();
  return report;
}

Eigenmode extract_worst_mode(const Matrix& matrix, const SpectrumReport& report, double peak) {
  if (report.eigenvalues.empty()) throw std::invalid_argument("empty spectrum");
  if (!(peak > 0.0)) throw std::invalid_argument("peak amplitude must be positive");
  using Complex = std::complex<double>;
  using ComplexMatrix = Eigen::MatrixXcd;
  using ComplexVector = Eigen::VectorXcd;

  const Eigen::Index n = matrix.rows();
  const Complex lambda = report.worst();
  const double scale = std::max(1.0, std::abs(lambda));
  // A slightly perturbed shift keeps the factorization nonsingular.
  const Complex shift = lambda + Complex(1e-10 * scale, 1e-10 * scale);
  ComplexMatrix shifted = matrix.cast<Complex>();
  shifted.diagonal().array() -= shift;
  const Eigen::PartialPivLU<ComplexMatrix> lu(shifted);

  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(1.0 + 0.01 * static_cast<double>(i % 7), 0.0);
  v.normalize();
  for (int it = 0; it < kInverseIterations; ++it) {
    v = lu.solve(v);
    v.normalize();
  }

  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::abs(v(big)) / v(big);

  Eigenmode mode;
  mode.eigenvalue = lambda;
  const ComplexMatrix a = matrix.cast<Complex>();
  mode.residual = (a * v - lambda * v).norm() / v.norm();
  mode.defective = mode.residual > kDefectiveResidual;

  Vector real = v.real();
  const double max_abs = real.cwiseAbs().maxCoeff();
  mode.values = real * (peak / max_abs);
  return mode;
}

}  // namespace sbpstab
