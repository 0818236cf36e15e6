#include "hopfjordan/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hopfjordan {

void Tolerance::validate() const {
  if (!(eigen_cluster_eps >= 0.0) || !std::isfinite(eigen_cluster_eps) ||
      !(residual_eps >= 0.0) || !std::isfinite(residual_eps)) {
    throw DomainError(ErrorKind::ContractViolation,
                      "tolerances must be finite and nonnegative");
  }
}

ComplexMatrix::ComplexMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {
  if (n <= 0) throw DomainError(ErrorKind::ShapeMismatch, "dimension must be positive");
}

ComplexMatrix::ComplexMatrix(int n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n <= 0) throw DomainError(ErrorKind::ShapeMismatch, "dimension must be positive");
  if (entries_.size() != static_cast<size_t>(n) * n) {
    throw DomainError(ErrorKind::ShapeMismatch, "entry count does not match dimension");
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
  ComplexMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = diag[static_cast<size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::scalar(int n, Complex value) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = value;
  return m;
}

namespace {
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DomainError(ErrorKind::ShapeMismatch, "matrix dimensions differ");
  }
}
}  // namespace

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  require_same_dim(*this, rhs);
  ComplexMatrix out(n_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  require_same_dim(*this, rhs);
  ComplexMatrix out(n_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  require_same_dim(*this, rhs);
  ComplexMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Complex a = at(i, k);
      if (a == Complex(0.0)) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scale) const {
  ComplexMatrix out(n_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * scale;
  return out;
}

Complex ComplexMatrix::determinant() const {
  std::vector<Complex> a = entries_;
  const int n = n_;
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<size_t>(col) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(a[static_cast<size_t>(r) * n + col]);
      if (v > best) best = v, pivot = r;
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(pivot) * n + j], a[static_cast<size_t>(col) * n + j]);
      det = -det;
    }
    const Complex p = a[static_cast<size_t>(col) * n + col];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a[static_cast<size_t>(r) * n + col] / p;
      if (f == Complex(0.0)) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<size_t>(r) * n + j] -= f * a[static_cast<size_t>(col) * n + j];
    }
  }
  return det;
}

ComplexMatrix ComplexMatrix::inverse() const {
  const int n = n_;
  std::vector<Complex> a = entries_;
  std::vector<Complex> b(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i) * n + i] = 1.0;
  const double scale = std::max(1.0, max_norm());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<size_t>(col) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(a[static_cast<size_t>(r) * n + col]);
      if (v > best) best = v, pivot = r;
    }
    if (best <= scale * 1e-14) {
      throw DomainError(ErrorKind::SingularInput, "matrix is numerically singular");
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<size_t>(pivot) * n + j], a[static_cast<size_t>(col) * n + j]);
        std::swap(b[static_cast<size_t>(pivot) * n + j], b[static_cast<size_t>(col) * n + j]);
      }
    }
    const Complex p = a[static_cast<size_t>(col) * n + col];
    for (int j = 0; j < n; ++j) {
      a[static_cast<size_t>(col) * n + j] /= p;
      b[static_cast<size_t>(col) * n + j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a[static_cast<size_t>(r) * n + col];
      if (f == Complex(0.0)) continue;
      for (int j = 0; j < n; ++j) {
        a[static_cast<size_t>(r) * n + j] -= f * a[static_cast<size_t>(col) * n + j];
        b[static_cast<size_t>(r) * n + j] -= f * b[static_cast<size_t>(col) * n + j];
      }
    }
  }
  return ComplexMatrix(n, std::move(b));
}

ComplexMatrix ComplexMatrix::power(long long exponent) const {
  if (exponent < 0) return inverse().power(-exponent);
  ComplexMatrix result = identity(n_);
  ComplexMatrix base = *this;
  unsigned long long e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1ULL;
  }
  return result;
}

double ComplexMatrix::max_norm() const {
  double m = 0.0;
  for (const Complex& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw DomainError(ErrorKind::ShapeMismatch, "vector length does not match dimension");
  }
  std::vector<Complex> y(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Complex s = 0.0;
    for (int j = 0; j < n_; ++j) s += at(i, j) * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s;
  }
  return y;
}

double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double eps) {
  if (a.dim() != b.dim()) return false;
  return max_norm_diff(a, b) <= eps;
}

double max_norm(const std::vector<Complex>& x) {
  double m = 0.0;
  for (const Complex& v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace hopfjordan
