#pragma once

#include "hopfjordan/hopf_model.hpp"

namespace hopfjordan::hopfpipe {

/// Certified result of the Jordan-index pipeline. The index is computed two
/// independent ways (directly on the quotient H, and on the reduced finite
/// matrix group H'); a run never produces a report unless they agree.
struct JordanReport {
  int quotient_order = 0;            // |H| = [M : <g>]
  int jordan_index = 0;              // minimal abelian index of H
  groupcore::Subgroup witness;       // abelian subgroup of H attaining it
  ComplexMatrix root_matrix;         // K_hat used by the reduction
  int finite_model_order = 0;        // |H'|
  long long theta_exponent = 0;      // n with Theta = <g^n>
  long long primary_quotient_order = 0;  // [M : Theta] = |H|^2
  std::vector<Certificate> certificates;

  bool certified() const;
};

/// Full pipeline: validate, build the extension model, reduce, and certify.
/// Throws on any failed certificate; a returned report is always certified.
JordanReport aut_jordan_index(const LinearHopfModel& model, const Tolerance& tol,
                              std::uint64_t orbit_seed = kDefaultOrbitSeed);

struct ExactSequenceData {
  groupcore::FiniteGroup group;      // G = M / Theta, order |H|^2
  groupcore::GroupHom projection;    // G -> H with kernel <g>/Theta cyclic of order |H|
  groupcore::FiniteGroup quotient;   // H, the projection target
};

/// The finite group G = M/Theta together with its projection onto H. The
/// kernel is certified to be the central cyclic group of order |H|.
ExactSequenceData exact_sequence_data(const LinearHopfModel& model, const Tolerance& tol);

}  // namespace hopfjordan::hopfpipe
