#include "hopfjordan/central_extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hopfjordan::groupcore {

CentralExtensionZ CentralExtensionZ::create(FiniteGroup quotient,
                                            std::vector<std::vector<long long>> cocycle,
                                            std::vector<int> action_sign) {
  const int n = quotient.order();
  if (static_cast<int>(cocycle.size()) != n) {
    throw DomainError(ErrorKind::ShapeMismatch, "cocycle table must be |H| x |H|");
  }
  for (const auto& row : cocycle) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError(ErrorKind::ShapeMismatch, "cocycle table must be |H| x |H|");
    }
  }
  if (static_cast<int>(action_sign.size()) != n) {
    throw DomainError(ErrorKind::ShapeMismatch, "action sign must list every quotient element");
  }
  for (int s : action_sign) {
    if (s != 1 && s != -1) {
      throw DomainError(ErrorKind::ContractViolation, "action sign values must be +1 or -1");
    }
  }
  // character must be multiplicative with sign(e) = +1
  if (action_sign[static_cast<size_t>(quotient.identity())] != 1) {
    throw DomainError(ErrorKind::ContractViolation, "action sign must fix the identity");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (action_sign[static_cast<size_t>(quotient.mul(a, b))] !=
          action_sign[static_cast<size_t>(a)] * action_sign[static_cast<size_t>(b)]) {
        throw DomainError(ErrorKind::ContractViolation, "action sign is not a homomorphism");
      }
  const int e = quotient.identity();
  for (int h = 0; h < n; ++h) {
    if (cocycle[static_cast<size_t>(e)][static_cast<size_t>(h)] != 0 ||
        cocycle[static_cast<size_t>(h)][static_cast<size_t>(e)] != 0) {
      throw DomainError(ErrorKind::ContractViolation, "cocycle is not normalized");
    }
  }
  // twisted cocycle condition, the associativity law of the extension:
  // c(h1,h2) + c(h1h2,h3) = sign(h1)*c(h2,h3) + c(h1,h2h3)
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      for (int h3 = 0; h3 < n; ++h3) {
        const long long lhs = cocycle[static_cast<size_t>(h1)][static_cast<size_t>(h2)] +
                              cocycle[static_cast<size_t>(quotient.mul(h1, h2))][static_cast<size_t>(h3)];
        const long long rhs = action_sign[static_cast<size_t>(h1)] *
                                  cocycle[static_cast<size_t>(h2)][static_cast<size_t>(h3)] +
                              cocycle[static_cast<size_t>(h1)][static_cast<size_t>(quotient.mul(h2, h3))];
        if (lhs != rhs) {
          throw DomainError(ErrorKind::ContractViolation, "cocycle condition violated");
        }
      }
  CentralExtensionZ ext;
  ext.quotient_ = std::move(quotient);
  ext.cocycle_ = std::move(cocycle);
  ext.central_ = std::all_of(action_sign.begin(), action_sign.end(), [](int s) { return s == 1; });
  ext.action_sign_ = std::move(action_sign);
  return ext;
}

CentralExtensionZ CentralExtensionZ::central(FiniteGroup quotient,
                                             std::vector<std::vector<long long>> cocycle) {
  std::vector<int> signs(static_cast<size_t>(quotient.order()), 1);
  return create(std::move(quotient), std::move(cocycle), std::move(signs));
}

ExtElement CentralExtensionZ::mul(const ExtElement& a, const ExtElement& b) const {
  return {a.t + sign_of(a.h) * b.t + cocycle_at(a.h, b.h), quotient_.mul(a.h, b.h)};
}

ExtElement CentralExtensionZ::inverse(const ExtElement& a) const {
  // solve (a.t, a.h)(s, h^-1) = (0, e) for s
  const int hinv = quotient_.inv(a.h);
  return {-sign_of(a.h) * (a.t + cocycle_at(a.h, hinv)), hinv};
}

ExtElement CentralExtensionZ::conjugate(const ExtElement& a, const ExtElement& by) const {
  return mul(mul(by, a), inverse(by));
}

ExtElement CentralExtensionZ::power(const ExtElement& a, long long e) const {
  ExtElement base = e >= 0 ? a : inverse(a);
  unsigned long long k = static_cast<unsigned long long>(e >= 0 ? e : -e);
  ExtElement acc = identity();
  while (k > 0) {
    if (k & 1ULL) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1ULL;
  }
  return acc;
}

TransferMap transfer_power_map(const CentralExtensionZ& ext) {
  if (!ext.is_central()) {
    throw DomainError(ErrorKind::NonCentral,
                      "transfer requires a central fiber; reduce by index2_reduction first");
  }
  const FiniteGroup& h = ext.quotient();
  const long long n = h.order();
  TransferMap rho;
  rho.group_order = n;
  rho.coset_values.resize(static_cast<size_t>(h.order()));
  for (int x = 0; x < h.order(); ++x) {
    const ExtElement p = ext.power({0, x}, n);
    if (p.h != h.identity()) {
      throw DomainError(ErrorKind::CertificationFailure,
                        "n-th power did not land in the fiber");
    }
    rho.coset_values[static_cast<size_t>(x)] = p.t;
  }
  // homomorphism certificate at the coset level: rho is linear in t by
  // construction, so this is exhaustive.
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b) {
      const long long lhs = rho({0, a}) + rho({0, b});
      const long long rhs = rho(ext.mul({0, a}, {0, b}));
      if (lhs != rhs) {
        throw DomainError(ErrorKind::CertificationFailure,
                          "transfer map failed the homomorphism identity");
      }
    }
  return rho;
}

KernelZQuotient kernel_and_Z_quotient(const CentralExtensionZ& ext) {
  const TransferMap rho = transfer_power_map(ext);
  const FiniteGroup& h = ext.quotient();
  const long long n = rho.group_order;
  // kernel separation: on the fiber rho(t, e) = n*t, so only t = 0 dies
  if (rho.coset_values[static_cast<size_t>(h.identity())] != 0) {
    throw DomainError(ErrorKind::CertificationFailure, "transfer does not vanish at identity");
  }
  KernelZQuotient out;
  long long gcd_all = n;
  for (int x = 0; x < h.order(); ++x) {
    const long long v = rho.coset_values[static_cast<size_t>(x)];
    gcd_all = std::gcd(gcd_all, v);
    if (v % n == 0) out.kernel.push_back({-v / n, x});
  }
  out.index_m = gcd_all == 0 ? n : gcd_all;
  // normality: conjugate every kernel element by coset representatives and
  // by the fiber generator, and require membership
  auto in_kernel = [&](const ExtElement& a) {
    return std::find(out.kernel.begin(), out.kernel.end(), a) != out.kernel.end();
  };
  for (const ExtElement& k : out.kernel) {
    for (int x = 0; x < h.order(); ++x) {
      if (!in_kernel(ext.conjugate(k, {0, x}))) {
        throw DomainError(ErrorKind::CertificationFailure, "transfer kernel is not normal");
      }
    }
    if (!in_kernel(ext.conjugate(k, {1, h.identity()}))) {
      throw DomainError(ErrorKind::CertificationFailure, "transfer kernel is not normal");
    }
  }
  return out;
}

std::vector<ExtElement> schur_commutators_finite(const CentralExtensionZ& ext) {
  if (!ext.is_central()) {
    throw DomainError(ErrorKind::NonCentral, "commutator closure requires a central fiber");
  }
  const FiniteGroup& h = ext.quotient();
  long long max_cocycle = 0;
  for (const auto& row : ext.cocycle())
    for (long long v : row) max_cocycle = std::max(max_cocycle, std::llabs(v));
  const size_t cap = static_cast<size_t>(h.order()) * static_cast<size_t>(16 * (max_cocycle + 1)) + 64;

  std::set<ExtElement> closure;
  auto commutator = [&](const ExtElement& a, const ExtElement& b) {
    return ext.mul(ext.mul(a, b), ext.mul(ext.inverse(a), ext.inverse(b)));
  };
  for (int h1 = 0; h1 < h.order(); ++h1)
    for (int h2 = 0; h2 < h.order(); ++h2) {
      const ExtElement c = commutator({0, h1}, {0, h2});
      // in a central extension the commutator value is independent of the
      // fiber coordinates; certify on a shifted pair
      if (commutator({1, h1}, {-2, h2}) != c) {
        throw DomainError(ErrorKind::CertificationFailure,
                          "commutator depends on fiber coordinates in a central extension");
      }
      closure.insert(c);
    }
  closure.insert(ext.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ExtElement> snapshot(closure.begin(), closure.end());
    for (const ExtElement& a : snapshot) {
      for (const ExtElement& b : snapshot) {
        if (closure.insert(ext.mul(a, b)).second) grew = true;
        if (closure.size() > cap) {
          throw DomainError(ErrorKind::ModelInconsistency,
                            "commutator closure exceeded its cap (invalid cocycle data)");
        }
      }
    }
  }
  return {closure.begin(), closure.end()};
}

Index2Reduction index2_reduction(const CentralExtensionZ& ext) {
  const FiniteGroup& h = ext.quotient();
  if (ext.is_central()) {
    std::vector<int> all(static_cast<size_t>(h.order()));
    std::iota(all.begin(), all.end(), 0);
    return {ext, 1, std::move(all)};
  }
  std::vector<int> kept;
  for (int x = 0; x < h.order(); ++x)
    if (ext.sign_of(x) == 1) kept.push_back(x);
  // kernel of a surjective character onto {+1,-1} has index exactly 2
  std::vector<int> new_index(static_cast<size_t>(h.order()), -1);
  for (size_t i = 0; i < kept.size(); ++i) new_index[static_cast<size_t>(kept[i])] = static_cast<int>(i);
  const int m = static_cast<int>(kept.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  std::vector<std::vector<long long>> cocycle(static_cast<size_t>(m),
                                              std::vector<long long>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int prod = h.mul(kept[static_cast<size_t>(i)], kept[static_cast<size_t>(j)]);
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = new_index[static_cast<size_t>(prod)];
      cocycle[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          ext.cocycle_at(kept[static_cast<size_t>(i)], kept[static_cast<size_t>(j)]);
    }
  std::vector<std::string> labels;
  if (!h.labels().empty()) {
    for (int x : kept) labels.push_back(h.labels()[static_cast<size_t>(x)]);
  }
  FiniteGroup sub = FiniteGroup::from_table(std::move(table),
                                            new_index[static_cast<size_t>(h.identity())],
                                            std::move(labels));
  return {CentralExtensionZ::central(std::move(sub), std::move(cocycle)), 2, std::move(kept)};
}

IndexPreservation index_preservation_check(const FiniteGroup& h, const Subgroup& n,
                                           const GroupHom& psi, const FiniteGroup& psi_target) {
  if (!is_subgroup(h, n)) {
    throw DomainError(ErrorKind::HypothesisViolation, "N must be a subgroup of H");
  }
  const Subgroup z = center(h);
  for (int member : n.members) {
    if (!z.contains(member)) {
      throw DomainError(ErrorKind::HypothesisViolation, "N must lie in the center of H");
    }
  }
  if (!psi_target.is_abelian()) {
    throw DomainError(ErrorKind::HypothesisViolation, "psi target must be abelian");
  }
  if (!is_homomorphism(h, psi_target, psi)) {
    throw DomainError(ErrorKind::HypothesisViolation, "psi is not a homomorphism");
  }
  // ker(projection by N) = N, so the hypothesis is N meeting ker psi trivially
  for (int member : n.members) {
    if (member != h.identity() &&
        psi.images[static_cast<size_t>(member)] == psi_target.identity()) {
      throw DomainError(ErrorKind::HypothesisViolation,
                        "ker(g) and ker(psi) intersect beyond the identity");
    }
  }
  const long long lhs = minimal_abelian_index(h).index;
  const QuotientResult q = quotient(h, n);
  const long long rhs = minimal_abelian_index(q.group).index;
  return {lhs, rhs, lhs == rhs};
}

long long characteristic_power_exponent(const CentralExtensionZ& ext) {
  const FiniteGroup& h = ext.quotient();
  const long long n = h.order();
  const ExtElement theta_gen{n, h.identity()};
  const ExtElement theta_inv{-n, h.identity()};
  for (int x = 0; x < h.order(); ++x) {
    for (long long t = -2; t <= 2; ++t) {
      const ExtElement c = ext.conjugate(theta_gen, {t, x});
      if (!(c == theta_gen || c == theta_inv)) {
        throw DomainError(ErrorKind::CertificationFailure,
                          "conjugate of the characteristic generator left the subgroup");
      }
    }
  }
  return n;
}

std::vector<std::vector<long long>> zero_cocycle(int order) {
  return std::vector<std::vector<long long>>(static_cast<size_t>(order),
                                             std::vector<long long>(static_cast<size_t>(order), 0));
}

std::vector<std::vector<long long>> coboundary_cocycle(const FiniteGroup& h,
                                                       const std::vector<long long>& f) {
  if (static_cast<int>(f.size()) != h.order() ||
      f[static_cast<size_t>(h.identity())] != 0) {
    throw DomainError(ErrorKind::ContractViolation,
                      "coboundary needs one value per element with f(e) = 0");
  }
  auto c = zero_cocycle(h.order());
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      c[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          f[static_cast<size_t>(a)] + f[static_cast<size_t>(b)] -
          f[static_cast<size_t>(h.mul(a, b))];
  return c;
}

std::vector<std::vector<long long>> carry_cocycle(int k) {
  auto c = zero_cocycle(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      c[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b >= k) ? 1 : 0;
  return c;
}

std::vector<std::vector<long long>> pullback_cocycle(
    const FiniteGroup& h, const GroupHom& hom,
    const std::vector<std::vector<long long>>& target_cocycle) {
  auto c = zero_cocycle(h.order());
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      c[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          target_cocycle[static_cast<size_t>(hom.images[static_cast<size_t>(a)])]
                        [static_cast<size_t>(hom.images[static_cast<size_t>(b)])];
  return c;
}

std::vector<std::vector<long long>> add_cocycles(
    const std::vector<std::vector<long long>>& a,
    const std::vector<std::vector<long long>>& b) {
  auto c = a;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

}  // namespace hopfjordan::groupcore
