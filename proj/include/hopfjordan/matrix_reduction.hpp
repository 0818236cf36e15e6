#pragma once

#include "hopfjordan/central_extension.hpp"
#include "hopfjordan/complex_matrix.hpp"
#include "hopfjordan/spectra.hpp"

namespace hopfjordan::groupcore {

/// Extension model of a matrix group M with a designated central contraction
/// g: the abstract extension data together with the concrete coset
/// representatives (representatives[h] realizes quotient element h;
/// representatives[identity] is the identity matrix) and the (t, h)
/// coordinates of each input generator. Produced by
/// hopfpipe::build_extension_model.
struct ExtensionModel {
  CentralExtensionZ extension;
  std::vector<ComplexMatrix> representatives;
  std::vector<ExtElement> generator_elements;
};

struct ReducedModel {
  FiniteGroup group;                  // H', the finite matrix-group image
  std::vector<ComplexMatrix> elements;  // concrete matrices of H'
  ComplexMatrix root_matrix;          // the K_hat used by the reduction
  long long index_m;                  // positive generator of im(transfer)
  long long root_order;               // |H| / index_m, the order of the root taken
  double phi_k_residual;              // ||phi(K) - I||, certified small
};

/// Reduction of the infinite matrix group to a finite one with the same
/// minimal abelian index: each generator A with transfer value rho(A) maps to
/// A * K_hat^{-rho(A)/index_m}, where K_hat^{|H|/index_m} = K is the
/// commutant-preserving root. The map kills the fiber generator, so the image
/// H' is finite; both that and the index equality
/// minimal_abelian_index(H') = minimal_abelian_index(H) are certified.
ReducedModel reduce_to_finite(const std::vector<ComplexMatrix>& generators,
                              const ComplexMatrix& k_matrix, const ExtensionModel& model,
                              const Tolerance& tol);

}  // namespace hopfjordan::groupcore
