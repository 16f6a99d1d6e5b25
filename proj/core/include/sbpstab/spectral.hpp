#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sbpstab/dg_burgers.hpp"
#include "sbpstab/sbp.hpp"

namespace sbpstab {

inline constexpr double kDefaultFdStep = 1e-8;
/// Eigenvalues with |Re| below this are indistinguishable from zero given the
/// accuracy of a finite-difference Jacobian.
inline constexpr double kNumericalZeroBand = 1e-6;

/// A right-hand side evaluation failed while building Jacobian column `column`.
class JacobianColumnError : public std::runtime_error {
 public:
  JacobianColumnError(Eigen::Index column, const std::string& what);
  Eigen::Index column() const { return column_; }

 private:
  Eigen::Index column_;
};

/// Central-difference Jacobian of `rhs` at `baseflow`, column by column:
/// (rhs(u + eps e_j) - rhs(u - eps e_j)) / (2 eps).
Matrix fd_jacobian(const RhsOperator& rhs, const Vector& baseflow,
                   double eps = kDefaultFdStep);

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  double max_real_part = 0.0;
  std::size_t argmax = 0;

  std::complex<double> worst() const { return eigenvalues.at(argmax); }
  bool numerically_zero(std::size_t k) const {
    return std::abs(eigenvalues.at(k).real()) <= kNumericalZeroBand;
  }
  std::size_t numerically_zero_count() const;
};

class EigensolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full spectrum of a square real matrix through the real Schur form (LAPACK
/// dgeev). Throws EigensolverError when the QR iteration fails.
SpectrumReport eigenspectrum(const Matrix& matrix);

struct Eigenmode {
  Vector values;
  std::complex<double> eigenvalue;
  /// ||A v - lambda v|| / ||v|| for the complex eigenvector.
  double residual = 0.0;
  bool defective = false;
};

/// Eigenvector of the eigenvalue with largest real part, found by shifted
/// inverse iteration. The phase is fixed so the largest component is real and
/// positive; the real part is returned, rescaled to max |entry| = peak.
Eigenmode extract_worst_mode(const Matrix& matrix, const SpectrumReport& report,
                             double peak = 1e-3);

}  // namespace sbpstab
