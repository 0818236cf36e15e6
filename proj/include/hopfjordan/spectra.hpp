#pragma once

#include <vector>

#include "hopfjordan/complex_matrix.hpp"

namespace hopfjordan::spectra {

/// Eigenvalue, related routines and the decomposition below are capped at
/// this dimension; larger inputs raise DomainError(UnsupportedSize).
inline constexpr int kMaxSpectralDim = 8;

struct EigenvalueCluster {
  Complex value;
  int multiplicity;
};

/// Root-subspace decomposition of an invertible matrix K: distinct clustered
/// eigenvalues lambda_i, spectral projectors P_i onto the corresponding
/// generalized eigenspaces, and nilpotent parts N_i = (K - lambda_i I) P_i.
///
/// Invariants (all in max-entry norm, within the tolerance used to build it):
///   sum P_i = I,  P_i P_j = delta_ij P_i,  N_i^{mult_i} = 0,
///   K = sum (lambda_i P_i + N_i).
/// Every P_i and N_i is a polynomial in K, so anything commuting with K
/// commutes with each of them.
struct RootDecomposition {
  std::vector<Complex> eigenvalues;
  std::vector<int> multiplicities;
  std::vector<ComplexMatrix> projectors;
  std::vector<ComplexMatrix> nilpotents;
};

/// Clustered eigenvalues of K. Raw eigenvalues closer than
/// tol.eigen_cluster_eps (transitively) are merged; the cluster value is the
/// arithmetic mean of its members, which for a defective eigenvalue is far
/// more accurate than any individual root. Sorted by (re, im) ascending.
std::vector<EigenvalueCluster> eigenvalues(const ComplexMatrix& k, const Tolerance& tol);

/// Root-subspace decomposition of invertible K. Projectors are built as
/// Hermite interpolation polynomials evaluated at K, so the construction
/// works for defective matrices. Throws SingularInput for singular K and
/// IllConditionedSpectrum when two clusters sit closer than
/// 4 * eigen_cluster_eps (no reliable separation at that radius).
RootDecomposition root_decomposition(const ComplexMatrix& k, const Tolerance& tol);

/// m-th root of lambda*I + N for nilpotent N, via the generalized binomial
/// series truncated at the nilpotency index of N. The scalar branch is the
/// principal one: exp(log(lambda)/m) with arg(lambda) in (-pi, pi].
/// The result is a polynomial in N. m = 1 returns lambda*I + N unchanged.
ComplexMatrix nilpotent_mth_root(Complex lambda, const ComplexMatrix& nilpotent, int m,
                                 const Tolerance& tol = {});

/// Commutant-preserving m-th root: returns K_hat with K_hat^m = K such that
/// every matrix commuting with K also commutes with K_hat. Assembled
/// blockwise over the root decomposition; the result is a polynomial in K.
/// m = 1 returns K unchanged.
ComplexMatrix commutant_preserving_root(const ComplexMatrix& k, int m, const Tolerance& tol);

/// True iff ||AB - BA|| <= tol.residual_eps in the max-entry norm.
bool commute_check(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol);

/// True iff A commutes with every projector of the decomposition, i.e. every
/// root subspace is A-invariant.
bool invariance_check(const ComplexMatrix& a, const RootDecomposition& dec,
                      const Tolerance& tol);

/// True iff K is invertible and every eigenvalue modulus is below
/// 1 - margin, margin = 100 * tol.residual_eps. The spectral criterion for a
/// linear map to be a contraction.
bool is_linear_contraction(const ComplexMatrix& k, const Tolerance& tol);

/// Dynamical cross-check: iterate x <- Kx and report whether the max norm
/// falls below tol.residual_eps within max_iter steps.
bool orbit_converges(const ComplexMatrix& k, const std::vector<Complex>& x, int max_iter,
                     const Tolerance& tol);

}  // namespace hopfjordan::spectra
