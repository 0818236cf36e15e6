#include "hopfjordan/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hopfjordan::spectra {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  const int n = m.dim();
  Eigen::MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m.at(i, j);
  return out;
}

void require_spectral_dim(const ComplexMatrix& k) {
  if (k.dim() > kMaxSpectralDim) {
    throw DomainError(ErrorKind::UnsupportedSize,
                      "spectral operations support n <= " + std::to_string(kMaxSpectralDim));
  }
}

std::vector<Complex> raw_eigenvalues(const ComplexMatrix& k) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(to_eigen(k), /*computeU=*/false);
  if (schur.info() != Eigen::Success) {
    throw DomainError(ErrorKind::IllConditionedSpectrum, "Schur iteration did not converge");
  }
  std::vector<Complex> values(static_cast<size_t>(k.dim()));
  for (int i = 0; i < k.dim(); ++i) values[static_cast<size_t>(i)] = schur.matrixT()(i, i);
  return values;
}

// Transitive merge of values within radius eps; cluster value = member mean.
std::vector<EigenvalueCluster> cluster(std::vector<Complex> values, double eps) {
  const int n = static_cast<int>(values.size());
  std::vector<int> group(static_cast<size_t>(n));
  std::iota(group.begin(), group.end(), 0);
  // union-find without ranks; n <= 8
  auto find = [&](int i) {
    while (group[static_cast<size_t>(i)] != i) i = group[static_cast<size_t>(i)];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(values[static_cast<size_t>(i)] - values[static_cast<size_t>(j)]) <= eps)
        group[static_cast<size_t>(find(j))] = find(i);

  std::vector<EigenvalueCluster> clusters;
  std::vector<int> root_of(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (root_of[static_cast<size_t>(r)] < 0) {
      root_of[static_cast<size_t>(r)] = static_cast<int>(clusters.size());
      clusters.push_back({Complex(0.0), 0});
    }
    EigenvalueCluster& c = clusters[static_cast<size_t>(root_of[static_cast<size_t>(r)])];
    c.value += values[static_cast<size_t>(i)];
    c.multiplicity += 1;
  }
  for (EigenvalueCluster& c : clusters) c.value /= static_cast<double>(c.multiplicity);
  std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return clusters;
}

Complex principal_root(Complex lambda, int m) {
  return std::exp(std::log(lambda) / static_cast<double>(m));
}

}  // namespace

std::vector<EigenvalueCluster> eigenvalues(const ComplexMatrix& k, const Tolerance& tol) {
  tol.validate();
  require_spectral_dim(k);
  return cluster(raw_eigenvalues(k), tol.eigen_cluster_eps);
}

RootDecomposition root_decomposition(const ComplexMatrix& k, const Tolerance& tol) {
  tol.validate();
  require_spectral_dim(k);
  const int n = k.dim();
  const std::vector<EigenvalueCluster> clusters = cluster(raw_eigenvalues(k), tol.eigen_cluster_eps);

  for (const EigenvalueCluster& c : clusters) {
    if (std::abs(c.value) <= 10.0 * tol.residual_eps) {
      throw DomainError(ErrorKind::SingularInput, "matrix has a numerically zero eigenvalue");
    }
  }
  for (size_t i = 0; i < clusters.size(); ++i) {
    for (size_t j = i + 1; j < clusters.size(); ++j) {
      if (std::abs(clusters[i].value - clusters[j].value) < 4.0 * tol.eigen_cluster_eps) {
        throw DomainError(ErrorKind::IllConditionedSpectrum,
                          "eigenvalue clusters are not separable at the clustering radius");
      }
    }
  }

  RootDecomposition dec;
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  for (const EigenvalueCluster& ci : clusters) {
    const int mult = ci.multiplicity;
    // Q(z) = prod_{j != i} (z - lambda_j)^{mult_j}, expanded in u = z - lambda_i
    // and truncated at degree mult-1; only those coefficients feed the series
    // inverse below. Coefficient c[0] = Q(lambda_i) != 0 by cluster separation.
    std::vector<Complex> q(1, Complex(1.0));
    q.reserve(static_cast<size_t>(mult));
    for (const EigenvalueCluster& cj : clusters) {
      if (&cj == &ci) continue;
      for (int rep = 0; rep < cj.multiplicity; ++rep) {
        // multiply by (u + (lambda_i - lambda_j)), truncated
        std::vector<Complex> next(std::min<size_t>(q.size() + 1, static_cast<size_t>(mult)),
                                  Complex(0.0));
        const Complex shift = ci.value - cj.value;
        for (size_t d = 0; d < q.size(); ++d) {
          if (d < next.size()) next[d] += q[d] * shift;
          if (d + 1 < next.size()) next[d + 1] += q[d];
        }
        q = std::move(next);
      }
    }
    // Power-series inverse r of q to order mult-1: r*q = 1 + O(u^mult).
    std::vector<Complex> r(static_cast<size_t>(mult), Complex(0.0));
    r[0] = Complex(1.0) / q[0];
    for (int d = 1; d < mult; ++d) {
      Complex acc = 0.0;
      for (int j = 1; j <= d; ++j) {
        if (static_cast<size_t>(j) < q.size()) acc += q[static_cast<size_t>(j)] * r[static_cast<size_t>(d - j)];
      }
      r[static_cast<size_t>(d)] = -acc / q[0];
    }
    // P_i = r(K - lambda_i I) * prod_{j != i} (K - lambda_j I)^{mult_j}
    const ComplexMatrix shifted = k - eye * ci.value;
    ComplexMatrix series = eye * r[0];
    ComplexMatrix shifted_pow = eye;
    for (int d = 1; d < mult; ++d) {
      shifted_pow = shifted_pow * shifted;
      series = series + shifted_pow * r[static_cast<size_t>(d)];
    }
    ComplexMatrix annihilator = eye;
    for (const EigenvalueCluster& cj : clusters) {
      if (&cj == &ci) continue;
      const ComplexMatrix factor = k - eye * cj.value;
      for (int rep = 0; rep < cj.multiplicity; ++rep) annihilator = annihilator * factor;
    }
    const ComplexMatrix projector = series * annihilator;
    dec.eigenvalues.push_back(ci.value);
    dec.multiplicities.push_back(mult);
    dec.nilpotents.push_back(shifted * projector);
    dec.projectors.push_back(projector);
  }

  // The decomposition must reproduce the input; failure means the spectrum
  // was too ill-conditioned for the polynomial projector route.
  ComplexMatrix sum_p(n);
  ComplexMatrix recon(n);
  for (size_t i = 0; i < dec.projectors.size(); ++i) {
    sum_p = sum_p + dec.projectors[i];
    recon = recon + dec.projectors[i] * dec.eigenvalues[i] + dec.nilpotents[i];
  }
  const double budget = tol.residual_eps * std::max(1.0, k.max_norm());
  if (max_norm_diff(sum_p, eye) > budget || max_norm_diff(recon, k) > budget) {
    throw DomainError(ErrorKind::IllConditionedSpectrum,
                      "spectral projectors do not reconstruct the input within tolerance");
  }
  return dec;
}

ComplexMatrix nilpotent_mth_root(Complex lambda, const ComplexMatrix& nilpotent, int m,
                                 const Tolerance& tol) {
  tol.validate();
  if (m < 1) throw DomainError(ErrorKind::ContractViolation, "root order m must be >= 1");
  if (std::abs(lambda) <= 10.0 * tol.residual_eps) {
    throw DomainError(ErrorKind::SingularEigenvalue, "m-th root requested at lambda ~ 0");
  }
  const int n = nilpotent.dim();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  if (m == 1) return eye * lambda + nilpotent;

  // Nilpotency index: first power whose norm is negligible at the scale of N.
  const double bound =
      tol.residual_eps * std::pow(std::max(1.0, nilpotent.max_norm()), n);
  std::vector<ComplexMatrix> powers{eye};
  int index = -1;
  for (int p = 1; p <= n; ++p) {
    powers.push_back(powers.back() * nilpotent);
    if (powers.back().max_norm() <= bound) {
      index = p;
      break;
    }
  }
  if (index < 0) {
    throw DomainError(ErrorKind::ContractViolation, "matrix is not nilpotent within tolerance");
  }

  // (lambda + x)^{1/m} = lambda^{1/m} * sum_k C(1/m, k) (x/lambda)^k,
  // truncated at the nilpotency index.
  const Complex alpha = principal_root(lambda, m);
  ComplexMatrix sum(n);
  double coeff = 1.0;
  const double inv_m = 1.0 / static_cast<double>(m);
  Complex lambda_pow = 1.0;
  for (int kk = 0; kk < index; ++kk) {
    sum = sum + powers[static_cast<size_t>(kk)] * (alpha * coeff / lambda_pow);
    coeff *= (inv_m - static_cast<double>(kk)) / static_cast<double>(kk + 1);
    lambda_pow *= lambda;
  }
  return sum;
}

ComplexMatrix commutant_preserving_root(const ComplexMatrix& k, int m, const Tolerance& tol) {
  tol.validate();
  if (m < 1) throw DomainError(ErrorKind::ContractViolation, "root order m must be >= 1");
  if (m == 1) return k;
  const RootDecomposition dec = root_decomposition(k, tol);
  ComplexMatrix root(k.dim());
  for (size_t i = 0; i < dec.eigenvalues.size(); ++i) {
    const ComplexMatrix block_root =
        nilpotent_mth_root(dec.eigenvalues[i], dec.nilpotents[i], m, tol);
    root = root + block_root * dec.projectors[i];
  }
  return root;
}

bool commute_check(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  tol.validate();
  if (a.dim() != b.dim()) throw DomainError(ErrorKind::ShapeMismatch, "dimensions differ");
  return max_norm_diff(a * b, b * a) <= tol.residual_eps;
}

bool invariance_check(const ComplexMatrix& a, const RootDecomposition& dec,
                      const Tolerance& tol) {
  tol.validate();
  for (const ComplexMatrix& p : dec.projectors) {
    if (a.dim() != p.dim()) throw DomainError(ErrorKind::ShapeMismatch, "dimensions differ");
    if (max_norm_diff(a * p, p * a) > tol.residual_eps) return false;
  }
  return true;
}

bool is_linear_contraction(const ComplexMatrix& k, const Tolerance& tol) {
  tol.validate();
  require_spectral_dim(k);
  const double margin = 100.0 * tol.residual_eps;
  for (const Complex& v : raw_eigenvalues(k)) {
    const double modulus = std::abs(v);
    if (modulus <= margin) return false;          // not invertible
    if (modulus >= 1.0 - margin) return false;    // not contracting
  }
  return true;
}

bool orbit_converges(const ComplexMatrix& k, const std::vector<Complex>& x, int max_iter,
                     const Tolerance& tol) {
  tol.validate();
  std::vector<Complex> y = x;
  for (int iter = 0; iter < max_iter; ++iter) {
    y = k.apply(y);
    if (max_norm(y) <= tol.residual_eps) return true;
  }
  return false;
}

}  // namespace hopfjordan::spectra
