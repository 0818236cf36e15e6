#pragma once

#include <complex>
#include <vector>

#include "hopfjordan/errors.hpp"

namespace hopfjordan {

using Complex = std::complex<double>;

/// Numerical knobs shared by every tolerance-based operation.
///
/// eigen_cluster_eps is the radius used to merge numerically close
/// eigenvalues into one root subspace; residual_eps bounds max-entry-norm
/// residuals of matrix equations. Both must be finite and nonnegative.
struct Tolerance {
  double eigen_cluster_eps = 1e-7;
  double residual_eps = 1e-8;

  void validate() const;
};

/// Dense n-by-n complex matrix, row-major. Values are immutable in spirit:
/// operations return new matrices and never alias their inputs.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n);  // zero matrix
  ComplexMatrix(int n, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);
  static ComplexMatrix scalar(int n, Complex value);

  int dim() const { return n_; }
  const std::vector<Complex>& entries() const { return entries_; }

  Complex& at(int row, int col) { return entries_[static_cast<size_t>(row) * n_ + col]; }
  const Complex& at(int row, int col) const {
    return entries_[static_cast<size_t>(row) * n_ + col];
  }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(Complex scale) const;

  /// Gaussian-elimination determinant. Exact shape, any n.
  Complex determinant() const;

  /// Inverse by Gauss-Jordan with partial pivoting; throws
  /// DomainError(SingularInput) when a pivot in a numerically singular column
  /// is encountered.
  ComplexMatrix inverse() const;

  /// Integer power; negative exponents go through inverse().
  ComplexMatrix power(long long exponent) const;

  /// Max-entry norm (the norm used by every residual in this library).
  double max_norm() const;

  std::vector<Complex> apply(const std::vector<Complex>& x) const;

 private:
  int n_ = 0;
  std::vector<Complex> entries_;
};

/// max-entry norm of a - b; throws DomainError(ShapeMismatch) on unequal dims.
double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double eps);

double max_norm(const std::vector<Complex>& x);

}  // namespace hopfjordan
