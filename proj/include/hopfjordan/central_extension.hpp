#pragma once

#include <cstdint>
#include <functional>

#include "hopfjordan/finite_group.hpp"
#include "hopfjordan/subgroup_search.hpp"

namespace hopfjordan::groupcore {

/// Element of an extension of a finite group H by the integers: the pair
/// (t, h) stands for gamma^t * rep(h). Multiplication is
///   (t1,h1)(t2,h2) = (t1 + sign(h1)*t2 + c(h1,h2), h1*h2),
/// associative exactly when c satisfies the cocycle condition.
struct ExtElement {
  long long t = 0;
  int h = 0;

  bool operator==(const ExtElement&) const = default;
  auto operator<=>(const ExtElement&) const = default;
};

/// Group M fitting 1 -> Z -> M -> H -> 1, encoded by the finite quotient H,
/// a normalized integer 2-cocycle, and the action of H on the fiber as a
/// sign character (+1/-1 per element). A trivial character means the fiber
/// is central. Construction validates normalization, the (twisted) cocycle
/// condition for every triple, and multiplicativity of the character.
class CentralExtensionZ {
 public:
  static CentralExtensionZ create(FiniteGroup quotient,
                                  std::vector<std::vector<long long>> cocycle,
                                  std::vector<int> action_sign);

  /// Convenience: trivial character.
  static CentralExtensionZ central(FiniteGroup quotient,
                                   std::vector<std::vector<long long>> cocycle);

  const FiniteGroup& quotient() const { return quotient_; }
  const std::vector<std::vector<long long>>& cocycle() const { return cocycle_; }
  const std::vector<int>& action_sign() const { return action_sign_; }

  bool is_central() const { return central_; }
  long long cocycle_at(int h1, int h2) const {
    return cocycle_[static_cast<size_t>(h1)][static_cast<size_t>(h2)];
  }
  int sign_of(int h) const { return action_sign_[static_cast<size_t>(h)]; }

  ExtElement identity() const { return {0, quotient_.identity()}; }
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement inverse(const ExtElement& a) const;
  ExtElement conjugate(const ExtElement& a, const ExtElement& by) const;
  ExtElement power(const ExtElement& a, long long e) const;

 private:
  FiniteGroup quotient_;
  std::vector<std::vector<long long>> cocycle_;
  std::vector<int> action_sign_;
  bool central_ = true;
};

/// The transfer rho(a) = a^n with n = |H|, landing in the fiber. For a
/// central extension rho(t,h) = n*t + rho(0,h), so the whole map is captured
/// by the coset-level values. Exact integer arithmetic throughout.
struct TransferMap {
  long long group_order = 1;
  std::vector<long long> coset_values;  // rho(0, h) per quotient element

  long long operator()(const ExtElement& a) const {
    return group_order * a.t + coset_values[static_cast<size_t>(a.h)];
  }
};

/// Builds the transfer map and certifies the homomorphism identity
/// rho(ab) = rho(a) + rho(b) exhaustively at the coset level. Throws
/// NonCentral for a nontrivial action sign.
TransferMap transfer_power_map(const CentralExtensionZ& ext);

struct KernelZQuotient {
  std::vector<ExtElement> kernel;  // ker rho, listed explicitly
  long long index_m;               // positive generator of im rho in Z
};

/// Kernel of the transfer map (finite, normal, trivially meeting the fiber)
/// and the positive generator of its image, so M/ker ~ Z via rho/index_m.
/// All three properties are certified, not assumed.
KernelZQuotient kernel_and_Z_quotient(const CentralExtensionZ& ext);

/// Commutator subgroup of the extension, closed explicitly and certified
/// finite. Its projection to H is the commutator subgroup of H.
std::vector<ExtElement> schur_commutators_finite(const CentralExtensionZ& ext);

struct Index2Reduction {
  CentralExtensionZ extension;      // sub-extension with central fiber
  int index;                        // 1 or 2
  std::vector<int> kernel_members;  // quotient elements kept, ascending
};

/// Passes to the kernel of the action character: the sub-extension over an
/// index-<=2 subgroup on which the fiber is central. No-op for central input.
Index2Reduction index2_reduction(const CentralExtensionZ& ext);

struct IndexPreservation {
  long long lhs;  // minimal abelian index of H
  long long rhs;  // minimal abelian index of H/N
  bool equal;
};

/// Certificate generator for index preservation under a central quotient:
/// requires N <= Z(H), an abelian psi-target, and ker(H->H/N) meeting
/// ker(psi) trivially; violations raise HypothesisViolation.
IndexPreservation index_preservation_check(const FiniteGroup& h, const Subgroup& n,
                                           const GroupHom& psi, const FiniteGroup& psi_target);

/// Exponent n = |H| of the characteristic subgroup generated by gamma^n.
/// Verifies that conjugating (n, e) by every bounded representative lands in
/// {(n,e), (-n,e)}.
long long characteristic_power_exponent(const CentralExtensionZ& ext);

// --- cocycle builders -------------------------------------------------------

std::vector<std::vector<long long>> zero_cocycle(int order);

/// Coboundary of f: H -> Z with f(e) = 0:  c(a,b) = f(a) + f(b) - f(ab).
std::vector<std::vector<long long>> coboundary_cocycle(const FiniteGroup& h,
                                                       const std::vector<long long>& f);

/// Carry cocycle on the cyclic group of order k (elements indexed as powers):
/// c(a,b) = 1 when a+b wraps past k. The classic nontrivial class.
std::vector<std::vector<long long>> carry_cocycle(int k);

/// Pullback of a cocycle on the target along a homomorphism.
std::vector<std::vector<long long>> pullback_cocycle(
    const FiniteGroup& h, const GroupHom& hom,
    const std::vector<std::vector<long long>>& target_cocycle);

std::vector<std::vector<long long>> add_cocycles(
    const std::vector<std::vector<long long>>& a,
    const std::vector<std::vector<long long>>& b);

}  // namespace hopfjordan::groupcore
