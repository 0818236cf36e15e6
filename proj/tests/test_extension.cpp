#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hopfjordan/central_extension.hpp"
#include "hopfjordan/standard_groups.hpp"
#include "oracles.hpp"

using namespace hopfjordan;
using namespace hopfjordan::groupcore;

namespace {

// corpus of extensions: trivial cocycle plus seeded random ones per group
std::vector<std::vector<long long>> random_cocycle(const FiniteGroup& h, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> value(-3, 3);
  std::vector<long long> f(static_cast<size_t>(h.order()));
  for (auto& v : f) v = value(rng);
  f[static_cast<size_t>(h.identity())] = 0;
  return coboundary_cocycle(h, f);
}

CentralExtensionZ dihedral_action_model() {
  // H = C2 acting by inversion on the fiber, zero cocycle: infinite dihedral
  return CentralExtensionZ::create(make_cyclic(2), zero_cocycle(2), {1, -1});
}

}  // namespace

TEST_CASE("extension element arithmetic satisfies the group laws") {
  const FiniteGroup c2 = make_cyclic(2);
  auto twisted = carry_cocycle(2);
  const CentralExtensionZ ext = CentralExtensionZ::central(c2, twisted);
  const std::vector<ExtElement> sample = {{0, 0}, {1, 0}, {-2, 0}, {0, 1}, {1, 1}, {-1, 1}};
  for (const auto& a : sample) {
    CHECK(ext.mul(a, ext.inverse(a)) == ext.identity());
    CHECK(ext.mul(ext.inverse(a), a) == ext.identity());
    for (const auto& b : sample)
      for (const auto& c : sample)
        CHECK(ext.mul(ext.mul(a, b), c) == ext.mul(a, ext.mul(b, c)));
  }
  // with the carry cocycle, (0,x)^2 = (1,e): the extension is Z itself
  CHECK(ext.power({0, 1}, 2) == ExtElement{1, 0});
}

TEST_CASE("extension arithmetic with a nontrivial action sign") {
  const CentralExtensionZ ext = dihedral_action_model();
  // reflection conjugates the fiber to its inverse
  CHECK(ext.conjugate({1, 0}, {0, 1}) == ExtElement{-1, 0});
  const std::vector<ExtElement> sample = {{0, 0}, {2, 0}, {0, 1}, {-1, 1}};
  for (const auto& a : sample) {
    CHECK(ext.mul(a, ext.inverse(a)) == ext.identity());
    for (const auto& b : sample)
      for (const auto& c : sample)
        CHECK(ext.mul(ext.mul(a, b), c) == ext.mul(a, ext.mul(b, c)));
  }
}

TEST_CASE("invalid extension data is rejected") {
  const FiniteGroup c2 = make_cyclic(2);
  auto not_normalized = zero_cocycle(2);
  not_normalized[0][1] = 1;
  CHECK_THROWS_AS((void)CentralExtensionZ::central(c2, not_normalized), DomainError);

  auto broken = zero_cocycle(3);
  broken[1][1] = 1;  // violates the cocycle condition on C3
  CHECK_THROWS_AS((void)CentralExtensionZ::central(make_cyclic(3), broken), DomainError);

  CHECK_THROWS_AS((void)CentralExtensionZ::create(c2, zero_cocycle(2), {1, 2}), DomainError);
  CHECK_THROWS_AS((void)CentralExtensionZ::create(c2, zero_cocycle(2), {-1, 1}), DomainError);
}

TEST_CASE("transfer_power_map: direct product, carry cocycle, trivial group") {
  // trivial cocycle on C2: rho(t, h) = 2t
  const CentralExtensionZ direct = CentralExtensionZ::central(make_cyclic(2), zero_cocycle(2));
  const TransferMap rho_direct = transfer_power_map(direct);
  CHECK(rho_direct({0, 1}) == 0);
  CHECK(rho_direct({3, 0}) == 6);
  CHECK(rho_direct({3, 1}) == 6);

  // carry cocycle on C2: (0,x)^2 = (1,e), so rho(t,x) = 2t + 1, a bijection
  const CentralExtensionZ twisted = CentralExtensionZ::central(make_cyclic(2), carry_cocycle(2));
  const TransferMap rho = transfer_power_map(twisted);
  CHECK(rho({0, 1}) == 1);
  CHECK(rho({0, 0}) == 0);
  CHECK(rho({-1, 1}) == -1);
  std::set<long long> values;
  for (long long t = -3; t <= 3; ++t)
    for (int h = 0; h < 2; ++h) values.insert(rho({t, h}));
  CHECK(values.size() == 14);  // injective on the sample: M ~ Z

  // trivial quotient: rho is the identity on the fiber
  const CentralExtensionZ unit = CentralExtensionZ::central(make_cyclic(1), zero_cocycle(1));
  CHECK(transfer_power_map(unit)({5, 0}) == 5);
}

TEST_CASE("transfer_power_map rejects noncentral input") {
  try {
    (void)transfer_power_map(dihedral_action_model());
    FAIL("expected non-central");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NonCentral);
  }
}

TEST_CASE("transfer homomorphism identity over the corpus, exact integers") {
  std::mt19937_64 rng(2024);
  std::vector<FiniteGroup> corpus = {make_cyclic(2),   make_cyclic(3),  make_cyclic(8),
                                     make_cyclic(16),  make_dihedral(3), make_dihedral(4),
                                     make_dihedral(8), make_q8(),        make_a4()};
  for (const FiniteGroup& h : corpus) {
    std::vector<std::vector<std::vector<long long>>> cocycles{zero_cocycle(h.order())};
    for (int i = 0; i < 3; ++i) cocycles.push_back(random_cocycle(h, rng));
    for (const auto& c : cocycles) {
      const CentralExtensionZ ext = CentralExtensionZ::central(h, c);
      const TransferMap rho = transfer_power_map(ext);
      for (long long t1 = -2; t1 <= 2; ++t1)
        for (long long t2 = -2; t2 <= 2; ++t2)
          for (int h1 = 0; h1 < h.order(); ++h1)
            for (int h2 = 0; h2 < h.order(); ++h2) {
              const ExtElement a{t1, h1}, b{t2, h2};
              CHECK(rho(ext.mul(a, b)) == rho(a) + rho(b));
            }
      // kernel separation: only the fiber identity dies on the fiber
      CHECK(rho({0, h.identity()}) == 0);
      for (long long t = -2; t <= 2; ++t)
        if (t != 0) CHECK(rho({t, h.identity()}) != 0);
    }
  }
}

TEST_CASE("kernel_and_Z_quotient: S3 direct product, carry on C2, trivial") {
  const CentralExtensionZ s3_ext = CentralExtensionZ::central(make_s3(), zero_cocycle(6));
  const KernelZQuotient s3_kernel = kernel_and_Z_quotient(s3_ext);
  CHECK(s3_kernel.kernel.size() == 6);
  CHECK(s3_kernel.index_m == 6);
  for (const auto& k : s3_kernel.kernel) CHECK(k.t == 0);

  const CentralExtensionZ twisted = CentralExtensionZ::central(make_cyclic(2), carry_cocycle(2));
  const KernelZQuotient tw = kernel_and_Z_quotient(twisted);
  CHECK(tw.kernel.size() == 1);
  CHECK(tw.kernel[0] == twisted.identity());
  CHECK(tw.index_m == 1);

  const CentralExtensionZ unit = CentralExtensionZ::central(make_cyclic(1), zero_cocycle(1));
  const KernelZQuotient u = kernel_and_Z_quotient(unit);
  CHECK(u.kernel.size() == 1);
  CHECK(u.index_m == 1);
}

TEST_CASE("schur commutators: abelian direct, S3 direct, twisted C2") {
  const CentralExtensionZ abelian =
      CentralExtensionZ::central(make_klein_four(), zero_cocycle(4));
  CHECK(schur_commutators_finite(abelian) == std::vector<ExtElement>{{0, 0}});

  const FiniteGroup s3 = make_s3();
  const CentralExtensionZ s3_ext = CentralExtensionZ::central(s3, zero_cocycle(6));
  const auto commutators = schur_commutators_finite(s3_ext);
  CHECK(commutators.size() == 3);
  // projection to H is exactly the commutator subgroup A3
  std::set<int> projected;
  for (const auto& c : commutators) {
    CHECK(c.t == 0);
    projected.insert(c.h);
  }
  const Subgroup derived = commutator_subgroup(s3);
  CHECK(std::vector<int>(projected.begin(), projected.end()) == derived.members);

  const CentralExtensionZ twisted = CentralExtensionZ::central(make_cyclic(2), carry_cocycle(2));
  CHECK(schur_commutators_finite(twisted) == std::vector<ExtElement>{{0, 0}});
}

TEST_CASE("schur commutators stay bounded over random cocycles") {
  std::mt19937_64 rng(7);
  for (const FiniteGroup& h : {make_q8(), make_dihedral(6), make_a4()}) {
    for (int i = 0; i < 3; ++i) {
      const auto c = random_cocycle(h, rng);
      long long max_c = 0;
      for (const auto& row : c)
        for (long long v : row) max_c = std::max(max_c, std::llabs(v));
      const auto commutators =
          schur_commutators_finite(CentralExtensionZ::central(h, c));
      CHECK(commutators.size() <= static_cast<size_t>(h.order()) * (2 * max_c + 1));
    }
  }
}

TEST_CASE("index2_reduction: central no-op, infinite dihedral, trivial sign on S3") {
  const CentralExtensionZ central_ext =
      CentralExtensionZ::central(make_q8(), zero_cocycle(8));
  const auto unchanged = index2_reduction(central_ext);
  CHECK(unchanged.index == 1);
  CHECK(unchanged.extension.quotient().order() == 8);

  const auto dihedral = index2_reduction(dihedral_action_model());
  CHECK(dihedral.index == 2);
  CHECK(dihedral.extension.quotient().order() == 1);
  CHECK(dihedral.extension.is_central());
  CHECK(dihedral.kernel_members == std::vector<int>{0});

  const auto s3_case =
      index2_reduction(CentralExtensionZ::central(make_s3(), zero_cocycle(6)));
  CHECK(s3_case.index == 1);
  CHECK(s3_case.extension.quotient().order() == 6);
}

TEST_CASE("index2_reduction output always central, index divides 2") {
  // D4 acting through its sign character
  const FiniteGroup d4 = make_dihedral(4);
  std::vector<int> signs(8, 1);
  for (int i = 4; i < 8; ++i) signs[static_cast<size_t>(i)] = -1;  // reflections invert
  const CentralExtensionZ ext = CentralExtensionZ::create(d4, zero_cocycle(8), signs);
  const auto reduced = index2_reduction(ext);
  CHECK(reduced.index == 2);
  CHECK(reduced.extension.is_central());
  CHECK(reduced.extension.quotient().order() == 4);
  CHECK(2 % reduced.index == 0);
}

TEST_CASE("index_preservation_check: trivial N, Q8 obstruction, C4 x C2") {
  // with trivial N the kernel condition is automatic; any abelian psi works
  const FiniteGroup s3 = make_s3();
  const GroupHom to_c1{std::vector<int>(6, 0)};
  const auto trivial_case =
      index_preservation_check(s3, trivial_subgroup(s3), to_c1, make_cyclic(1));
  CHECK(trivial_case.equal);
  CHECK(trivial_case.lhs == 2);
  CHECK(trivial_case.rhs == 2);

  // Q8 with N = center: every homomorphism to an abelian target kills the
  // commutator subgroup = center, so the kernel condition must fail
  const FiniteGroup q8 = make_q8();
  const Subgroup n = center(q8);
  const auto to_klein = quotient(q8, n);
  CHECK_THROWS_AS((void)index_preservation_check(q8, n, to_klein.projection, to_klein.group),
                  DomainError);
  // oracle: enumerate every hom Q8 -> A for small abelian A and confirm each
  // kills the center (so no psi can satisfy the hypothesis)
  const std::vector<FiniteGroup> abelian_targets = {make_cyclic(1), make_cyclic(2),
                                                    make_cyclic(3), make_cyclic(4),
                                                    make_klein_four()};
  const std::vector<int> q8_gens = {2, 4};  // i and j generate Q8
  const int minus_one = q8.mul(2, 2);       // i^2 = -1
  for (const FiniteGroup& target : abelian_targets) {
    for (int x = 0; x < target.order(); ++x) {
      for (int y = 0; y < target.order(); ++y) {
        const auto hom = oracles::extend_hom(q8, target, q8_gens, {x, y});
        if (!hom) continue;
        CHECK(hom->images[static_cast<size_t>(minus_one)] == target.identity());
      }
    }
  }

  // C4 x C2 with N = the C2 factor; psi(a,b) = a + 2b is a homomorphism to
  // C4 whose kernel {(0,0),(2,1)} meets N only at the identity
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  auto idx = [](int a, int b) { return a * 2 + b; };
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          table[static_cast<size_t>(idx(a1, b1))][static_cast<size_t>(idx(a2, b2))] =
              idx((a1 + a2) % 4, (b1 + b2) % 2);
  const FiniteGroup c4xc2 = FiniteGroup::from_table(std::move(table), 0);
  const Subgroup c2_factor{{idx(0, 0), idx(0, 1)}};
  GroupHom psi;
  psi.images.resize(8);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b) psi.images[static_cast<size_t>(idx(a, b))] = (a + 2 * b) % 4;
  const auto abelian_case = index_preservation_check(c4xc2, c2_factor, psi, make_cyclic(4));
  CHECK(abelian_case.equal);
  CHECK(abelian_case.lhs == 1);
  CHECK(abelian_case.rhs == 1);
}

TEST_CASE("characteristic_power_exponent: trivial, Q8 model, dihedral action") {
  const CentralExtensionZ unit = CentralExtensionZ::central(make_cyclic(1), zero_cocycle(1));
  CHECK(characteristic_power_exponent(unit) == 1);

  const CentralExtensionZ q8_ext = CentralExtensionZ::central(make_q8(), zero_cocycle(8));
  CHECK(characteristic_power_exponent(q8_ext) == 8);

  const CentralExtensionZ dihedral = dihedral_action_model();
  CHECK(characteristic_power_exponent(dihedral) == 2);
  // the reflection genuinely inverts the generator of Theta
  CHECK(dihedral.conjugate({2, 0}, {0, 1}) == ExtElement{-2, 0});
}

TEST_CASE("cocycle builders produce valid cocycles") {
  std::mt19937_64 rng(55);
  const FiniteGroup d6 = make_dihedral(6);
  // sign character of the dihedral group pulled back through the carry cocycle
  GroupHom sign{std::vector<int>(12, 0)};
  for (int i = 6; i < 12; ++i) sign.images[static_cast<size_t>(i)] = 1;
  const auto pulled = pullback_cocycle(d6, sign, carry_cocycle(2));
  const auto combined = add_cocycles(pulled, random_cocycle(d6, rng));
  CHECK_NOTHROW((void)CentralExtensionZ::central(d6, pulled));
  CHECK_NOTHROW((void)CentralExtensionZ::central(d6, combined));

  const FiniteGroup a4 = make_a4();
  const auto a4_abelianized = quotient(a4, commutator_subgroup(a4));
  REQUIRE(a4_abelianized.group.order() == 3);
  const auto a4_pulled =
      pullback_cocycle(a4, a4_abelianized.projection, carry_cocycle(3));
  CHECK_NOTHROW((void)CentralExtensionZ::central(a4, a4_pulled));
}
