#include "hopfjordan/matrix_reduction.hpp"

#include "hopfjordan/standard_groups.hpp"
#include "hopfjordan/subgroup_search.hpp"

namespace hopfjordan::groupcore {

ReducedModel reduce_to_finite(const std::vector<ComplexMatrix>& generators,
                              const ComplexMatrix& k_matrix, const ExtensionModel& model,
                              const Tolerance& tol) {
  tol.validate();
  const CentralExtensionZ& ext = model.extension;
  if (!ext.is_central()) {
    throw DomainError(ErrorKind::NonCentral, "reduction requires a central fiber");
  }
  if (model.generator_elements.size() != generators.size()) {
    throw DomainError(ErrorKind::ShapeMismatch,
                      "extension model does not cover every generator");
  }
  const TransferMap rho = transfer_power_map(ext);
  const KernelZQuotient kz = kernel_and_Z_quotient(ext);
  const long long n = ext.quotient().order();
  if (n % kz.index_m != 0) {
    throw DomainError(ErrorKind::ModelInconsistency,
                      "transfer image generator does not divide the quotient order");
  }
  // K has transfer value n, so its image in M/ker ~ Z is n/index_m; the root
  // of that order is the one killed by A -> A * K_hat^{-rho(A)/index_m}.
  const long long root_order = n / kz.index_m;
  const ComplexMatrix k_hat =
      spectra::commutant_preserving_root(k_matrix, static_cast<int>(root_order), tol);

  std::vector<ComplexMatrix> images;
  images.reserve(generators.size());
  for (size_t i = 0; i < generators.size(); ++i) {
    const long long exponent = rho(model.generator_elements[i]) / kz.index_m;
    images.push_back(generators[i] * k_hat.power(-exponent));
  }

  // phi must kill the fiber generator; a residual here means the branch or
  // the exponent normalization is inconsistent.
  const ComplexMatrix phi_k = k_matrix * k_hat.power(-root_order);
  const double phi_k_residual =
      max_norm_diff(phi_k, ComplexMatrix::identity(k_matrix.dim()));
  if (phi_k_residual > tol.residual_eps) {
    throw DomainError(ErrorKind::CertificationFailure,
                      "reduction does not kill the fiber generator (branch inconsistency)");
  }

  Closure<ComplexMatrix> closure = [&] {
    try {
      return matrix_closure(images, tol, ext.quotient().order());
    } catch (const DomainError& err) {
      if (err.kind() == ErrorKind::NotFinite) {
        throw DomainError(ErrorKind::ModelInconsistency,
                          "reduced group closure exceeded the quotient order");
      }
      throw;
    }
  }();

  const MinimalAbelianIndex direct = minimal_abelian_index(ext.quotient());
  const MinimalAbelianIndex reduced = minimal_abelian_index(closure.group);
  if (direct.index != reduced.index) {
    throw DomainError(ErrorKind::CertificationFailure,
                      "minimal abelian index changed under reduction");
  }

  return {std::move(closure.group), std::move(closure.elements), k_hat,
          kz.index_m, root_order, phi_k_residual};
}

}  // namespace hopfjordan::groupcore
