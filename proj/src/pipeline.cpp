#include "hopfjordan/pipeline.hpp"

#include <algorithm>

namespace hopfjordan::hopfpipe {

using groupcore::CentralExtensionZ;
using groupcore::ExtElement;
using groupcore::FiniteGroup;
using groupcore::GroupHom;
using groupcore::Subgroup;

bool JordanReport::certified() const {
  return !certificates.empty() &&
         std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.passed; });
}

JordanReport aut_jordan_index(const LinearHopfModel& model, const Tolerance& tol,
                              std::uint64_t orbit_seed) {
  JordanReport report;
  report.certificates = validate_model(model, tol, orbit_seed);
  for (const Certificate& c : report.certificates) {
    if (!c.passed) {
      throw DomainError(ErrorKind::InvalidModel, "certificate failed: " + c.name);
    }
  }

  const ExtensionModel em = build_extension_model(model, tol);
  const FiniteGroup& quotient = em.extension.quotient();
  report.quotient_order = quotient.order();
  report.certificates.push_back({"extension.cocycle_condition", true, 0.0,
                                 "validated exactly on construction"});

  // For a linear model the fiber action is trivial by the normality
  // certificate; record the reduction as a no-op.
  const auto reduction2 = groupcore::index2_reduction(em.extension);
  report.certificates.push_back({"extension.action_sign_trivial", reduction2.index == 1, 0.0,
                                 "index2 reduction index = " + std::to_string(reduction2.index)});

  const groupcore::MinimalAbelianIndex direct = groupcore::minimal_abelian_index(quotient);

  const groupcore::ReducedModel reduced =
      groupcore::reduce_to_finite(model.generators, model.contraction(), em, tol);
  report.certificates.push_back({"reduce.fiber_killed", true, reduced.phi_k_residual,
                                 "||phi(g) - I|| for the reduction map"});
  report.finite_model_order = reduced.group.order();
  report.root_matrix = reduced.root_matrix;

  const groupcore::MinimalAbelianIndex indirect =
      groupcore::minimal_abelian_index(reduced.group);
  if (direct.index != indirect.index) {
    // reduce_to_finite certifies this itself; double failure here would be a bug
    throw DomainError(ErrorKind::CertificationFailure,
                      "independent jordan-index computations disagree");
  }
  report.jordan_index = direct.index;
  report.witness = direct.witness;
  report.certificates.push_back(
      {"jordan.index_agreement", true, 0.0,
       "quotient route and reduced-matrix route both give " + std::to_string(direct.index)});

  report.theta_exponent = groupcore::characteristic_power_exponent(em.extension);
  report.certificates.push_back({"theta.characteristic_invariance",
                                 report.theta_exponent == quotient.order(), 0.0,
                                 "inner conjugates of g^n stay in {g^n, g^-n}"});

  report.primary_quotient_order =
      static_cast<long long>(report.quotient_order) * report.quotient_order;
  const bool arithmetic_ok = report.quotient_order % report.jordan_index == 0;
  report.certificates.push_back({"report.arithmetic", arithmetic_ok, 0.0,
                                 "[M:Theta] = |H|^2 and jordan_index | |H|"});
  for (const Certificate& c : report.certificates) {
    if (!c.passed) {
      throw DomainError(ErrorKind::CertificationFailure, "certificate failed: " + c.name);
    }
  }
  return report;
}

ExactSequenceData exact_sequence_data(const LinearHopfModel& model, const Tolerance& tol) {
  const ExtensionModel em = build_extension_model(model, tol);
  const CentralExtensionZ& ext = em.extension;
  const FiniteGroup& h = ext.quotient();
  const int n = h.order();

  // elements of M / Theta are (t mod n, h); index = t * n + h
  auto index_of = [n](long long t, int hh) {
    const int tm = static_cast<int>(((t % n) + n) % n);
    return tm * n + hh;
  };
  const int order = n * n;
  std::vector<std::vector<int>> table(static_cast<size_t>(order),
                                      std::vector<int>(static_cast<size_t>(order)));
  for (int t1 = 0; t1 < n; ++t1)
    for (int h1 = 0; h1 < n; ++h1)
      for (int t2 = 0; t2 < n; ++t2)
        for (int h2 = 0; h2 < n; ++h2) {
          const ExtElement p = ext.mul({t1, h1}, {t2, h2});
          table[static_cast<size_t>(index_of(t1, h1))][static_cast<size_t>(index_of(t2, h2))] =
              index_of(p.t, p.h);
        }
  FiniteGroup big = FiniteGroup::from_table(std::move(table), index_of(0, h.identity()));

  GroupHom projection;
  projection.images.resize(static_cast<size_t>(order));
  for (int t = 0; t < n; ++t)
    for (int hh = 0; hh < n; ++hh) projection.images[static_cast<size_t>(index_of(t, hh))] = hh;
  if (!groupcore::is_homomorphism(big, h, projection)) {
    throw DomainError(ErrorKind::CertificationFailure, "projection G -> H is not a homomorphism");
  }

  // kernel must be the cyclic central image of the fiber
  std::vector<int> kernel;
  for (int idx = 0; idx < order; ++idx)
    if (projection.images[static_cast<size_t>(idx)] == h.identity()) kernel.push_back(idx);
  if (static_cast<int>(kernel.size()) != n) {
    throw DomainError(ErrorKind::CertificationFailure, "kernel of G -> H has the wrong order");
  }
  const Subgroup fiber_image = groupcore::generated_subgroup(big, {index_of(1, h.identity())});
  std::vector<int> fiber_sorted = fiber_image.members;
  std::sort(kernel.begin(), kernel.end());
  if (fiber_sorted != kernel) {
    throw DomainError(ErrorKind::CertificationFailure,
                      "kernel of G -> H is not the cyclic fiber image");
  }
  return {std::move(big), std::move(projection), h};
}

}  // namespace hopfjordan::hopfpipe
