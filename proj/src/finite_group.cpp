#include "hopfjordan/finite_group.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hopfjordan::groupcore {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, int identity,
                                    std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = static_cast<int>(table.size());
  const int n = g.order_;
  if (n <= 0) throw DomainError(ErrorKind::ContractViolation, "group order must be positive");
  if (identity < 0 || identity >= n) {
    throw DomainError(ErrorKind::ContractViolation, "identity index out of range");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError(ErrorKind::ShapeMismatch, "multiplication table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        throw DomainError(ErrorKind::ContractViolation, "table entry out of range");
      }
    }
  }
  // Latin square: each row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(static_cast<size_t>(n), false);
    std::vector<bool> seen_col(static_cast<size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[static_cast<size_t>(table[static_cast<size_t>(i)][static_cast<size_t>(j)])] ||
          seen_col[static_cast<size_t>(table[static_cast<size_t>(j)][static_cast<size_t>(i)])]) {
        throw DomainError(ErrorKind::ContractViolation, "table is not a Latin square");
      }
      seen_row[static_cast<size_t>(table[static_cast<size_t>(i)][static_cast<size_t>(j)])] = true;
      seen_col[static_cast<size_t>(table[static_cast<size_t>(j)][static_cast<size_t>(i)])] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (table[static_cast<size_t>(identity)][static_cast<size_t>(i)] != i ||
        table[static_cast<size_t>(i)][static_cast<size_t>(identity)] != i) {
      throw DomainError(ErrorKind::ContractViolation, "identity row or column is not trivial");
    }
  }
  auto product = [&](int a, int b) {
    return table[static_cast<size_t>(a)][static_cast<size_t>(b)];
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (product(product(a, b), c) != product(a, product(b, c))) {
            throw DomainError(ErrorKind::ContractViolation, "multiplication is not associative");
          }
  } else {
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 4096; ++trial) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      if (product(product(a, b), c) != product(a, product(b, c))) {
        throw DomainError(ErrorKind::ContractViolation, "multiplication is not associative");
      }
    }
  }
  g.identity_ = identity;
  g.table_ = std::move(table);
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw DomainError(ErrorKind::ShapeMismatch, "label count does not match order");
  }
  g.labels_ = std::move(labels);
  g.inverses_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == identity) g.inverses_[static_cast<size_t>(a)] = b;
  return g;
}

int FiniteGroup::power(int a, long long e) const {
  int base = e >= 0 ? a : inv(a);
  unsigned long long k = static_cast<unsigned long long>(e >= 0 ? e : -e);
  int acc = identity_;
  while (k > 0) {
    if (k & 1ULL) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1ULL;
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(int element) const {
  return std::binary_search(members.begin(), members.end(), element);
}

bool is_closed_subset(const FiniteGroup& g, const std::vector<int>& members) {
  for (int a : members)
    for (int b : members)
      if (!std::binary_search(members.begin(), members.end(), g.mul(a, b))) return false;
  return true;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.members.empty() || !s.contains(g.identity())) return false;
  if (!std::is_sorted(s.members.begin(), s.members.end())) return false;
  if (!is_closed_subset(g, s.members)) return false;
  for (int a : s.members)
    if (!s.contains(g.inv(a))) return false;
  return true;
}

bool is_abelian_subset(const FiniteGroup& g, const std::vector<int>& members) {
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (g.mul(members[i], members[j]) != g.mul(members[j], members[i])) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (int a = 0; a < g.order(); ++a)
    for (int m : s.members)
      if (!s.contains(g.conjugate(m, a))) return false;
  return true;
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupHom& h) {
  if (static_cast<int>(h.images.size()) != source.order()) return false;
  for (int img : h.images)
    if (img < 0 || img >= target.order()) return false;
  if (h.images[static_cast<size_t>(source.identity())] != target.identity()) return false;
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (h.images[static_cast<size_t>(source.mul(a, b))] !=
          target.mul(h.images[static_cast<size_t>(a)], h.images[static_cast<size_t>(b)]))
        return false;
  return true;
}

int subgroup_index(const FiniteGroup& g, const Subgroup& s) {
  if (s.members.empty() || g.order() % s.order() != 0) {
    throw DomainError(ErrorKind::ContractViolation, "subgroup order does not divide group order");
  }
  return g.order() / s.order();
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& seed) {
  std::set<int> closure(seed.begin(), seed.end());
  closure.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(closure.begin(), closure.end());
    for (int a : snapshot)
      for (int b : snapshot)
        if (closure.insert(g.mul(a, b)).second) grew = true;
  }
  return Subgroup{std::vector<int>(closure.begin(), closure.end())};
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<size_t>(i)] = i;
  return Subgroup{std::move(all)};
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int> members;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) members.push_back(a);
  }
  return Subgroup{std::move(members)};
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> commutators;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      commutators.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generated_subgroup(g, commutators);
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n)) {
    throw DomainError(ErrorKind::ContractViolation, "quotient requires a subgroup");
  }
  if (!is_normal(g, n)) {
    throw DomainError(ErrorKind::NotNormal, "quotient requires a normal subgroup");
  }
  const int order = g.order();
  std::vector<int> coset_of(static_cast<size_t>(order), -1);
  std::vector<int> reps;
  for (int a = 0; a < order; ++a) {
    if (coset_of[static_cast<size_t>(a)] >= 0) continue;
    const int coset = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int m : n.members) coset_of[static_cast<size_t>(g.mul(m, a))] = coset;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(q),
                                      std::vector<int>(static_cast<size_t>(q)));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          coset_of[static_cast<size_t>(g.mul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]))];
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (int rep : reps) labels.push_back(g.labels()[static_cast<size_t>(rep)] + "N");
  }
  FiniteGroup quotient_group = FiniteGroup::from_table(
      std::move(table), coset_of[static_cast<size_t>(g.identity())], std::move(labels));
  return {std::move(quotient_group), GroupHom{std::move(coset_of)}};
}

}  // namespace hopfjordan::groupcore
