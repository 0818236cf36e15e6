#pragma once

#include <string>
#include <vector>

#include "hopfjordan/errors.hpp"

namespace hopfjordan::groupcore {

/// Finite group given by its multiplication table: table[i][j] is the index
/// of the product i*j. Construction validates the group axioms: the table is
/// a Latin square, the identity row/column are trivial, and associativity
/// holds (exhaustively for order <= 64, on seeded samples above that).
class FiniteGroup {
 public:
  FiniteGroup() = default;

  static FiniteGroup from_table(std::vector<std::vector<int>> table, int identity,
                                std::vector<std::string> labels = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inv(int a) const { return inverses_[static_cast<size_t>(a)]; }
  int conjugate(int a, int by) const { return mul(mul(by, a), inv(by)); }
  int power(int a, long long e) const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_abelian() const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  std::vector<std::string> labels_;
};

/// Subgroup handle: a sorted member list. The parent group is supplied at
/// each call site; member indices refer to the parent's element indexing.
struct Subgroup {
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int element) const;
  bool operator==(const Subgroup& rhs) const = default;
};

/// Homomorphism between finite groups, stored as per-element image indices.
struct GroupHom {
  std::vector<int> images;
};

bool is_closed_subset(const FiniteGroup& g, const std::vector<int>& members);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_abelian_subset(const FiniteGroup& g, const std::vector<int>& members);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupHom& h);

/// Index of s in g; throws ContractViolation if Lagrange fails (impossible
/// for a genuine subgroup).
int subgroup_index(const FiniteGroup& g, const Subgroup& s);

/// Closure of a seed set inside g (the generated subgroup).
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& seed);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

/// Elements commuting with all of g.
Subgroup center(const FiniteGroup& g);

/// Subgroup generated by all commutators a b a^-1 b^-1.
Subgroup commutator_subgroup(const FiniteGroup& g);

struct QuotientResult {
  FiniteGroup group;
  GroupHom projection;
};

/// Quotient by a normal subgroup with its canonical projection. Cosets are
/// indexed by ascending minimal representative, so the output is
/// deterministic. Throws NotNormal for non-normal n.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

/// Result of closing a generator set: the abstract group plus the mapping
/// from element index to the concrete element (index 0 is the identity).
template <typename Elem>
struct Closure {
  FiniteGroup group;
  std::vector<Elem> elements;
};

/// Generic closure of generators under an associative product. Mul and Eq
/// define the element semantics (exact for permutations, tolerance-based for
/// matrices). Throws NotFinite when the closure exceeds cap.
template <typename Elem, typename Mul, typename Eq>
Closure<Elem> closure_from_generators(const std::vector<Elem>& generators,
                                      const Elem& identity_element, Mul mul, Eq eq, int cap) {
  std::vector<Elem> elements{identity_element};
  auto find = [&](const Elem& e) -> int {
    for (size_t i = 0; i < elements.size(); ++i)
      if (eq(elements[i], e)) return static_cast<int>(i);
    return -1;
  };
  for (size_t i = 0; i < elements.size(); ++i) {
    for (const Elem& gen : generators) {
      Elem product = mul(elements[i], gen);
      if (find(product) >= 0) continue;
      elements.push_back(std::move(product));
      if (static_cast<int>(elements.size()) > cap) {
        throw DomainError(ErrorKind::NotFinite,
                          "generated closure exceeded cap of " + std::to_string(cap));
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int idx = find(mul(elements[static_cast<size_t>(i)], elements[static_cast<size_t>(j)]));
      if (idx < 0) {
        throw DomainError(ErrorKind::ModelInconsistency,
                          "closure is not multiplicatively closed (equality tolerance too tight?)");
      }
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = idx;
    }
  }
  return {FiniteGroup::from_table(std::move(table), 0), std::move(elements)};
}

}  // namespace hopfjordan::groupcore
