#pragma once

#include <cstdint>
#include <string>

#include "hopfjordan/matrix_reduction.hpp"

namespace hopfjordan::hopfpipe {

using groupcore::ExtensionModel;

/// Finitely many invertible matrices generating a group M in GL_n(C), with a
/// designated contraction g whose cyclic group is the deck group of the
/// model. Invariants (enforced by validate_model):
///   n >= 2; g passes the spectral contraction test; <g> is normal, and for
///   a contraction that forces A g A^-1 = g for every generator A.
struct LinearHopfModel {
  int dimension = 0;
  std::vector<ComplexMatrix> generators;
  int contraction_index = 0;
  int quotient_cap = kDefaultQuotientCap;

  static constexpr int kDefaultQuotientCap = 512;

  const ComplexMatrix& contraction() const {
    return generators[static_cast<size_t>(contraction_index)];
  }
};

struct Certificate {
  std::string name;
  bool passed = false;
  double residual = 0.0;  // 0 when the check is exact / not residual-based
  std::string detail;
};

inline constexpr std::uint64_t kDefaultOrbitSeed = 0x48504a31u;  // fixed sample seed
inline constexpr int kOrbitMaxIter = 200;
inline constexpr int kOrbitSampleCount = 8;

/// Structural certificates for a model: shape, generator invertibility, the
/// spectral contraction criterion on g, orbit convergence on the standard
/// basis plus seeded sample points, and normality/centrality of <g>.
/// Returns every certificate; callers decide whether failures are fatal.
std::vector<Certificate> validate_model(const LinearHopfModel& model, const Tolerance& tol,
                                        std::uint64_t orbit_seed = kDefaultOrbitSeed);

/// Throws DomainError(InvalidModel) naming the first failed certificate.
void require_valid(const LinearHopfModel& model, const Tolerance& tol,
                   std::uint64_t orbit_seed = kDefaultOrbitSeed);

/// Enumerates the cosets of the deck group <g> in M by closing generator
/// products modulo <g>. Equality mod <g> is decided by the determinant
/// logarithm: k = round(log|det(A^-1 B)| / log|det g|) gives the only
/// possible exponent, confirmed by an exact matrix comparison. Fails with
/// InfiniteQuotient past model.quotient_cap and with IllConditionedModel when
/// |det g| is too close to 1 for the logarithm to separate exponents.
ExtensionModel build_extension_model(const LinearHopfModel& model, const Tolerance& tol);

}  // namespace hopfjordan::hopfpipe
