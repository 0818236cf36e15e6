#pragma once

#include "hopfjordan/finite_group.hpp"

namespace hopfjordan::groupcore {

/// Subgroup enumeration is capped at this order.
inline constexpr int kMaxLatticeOrder = 256;

/// Bitmask subset scans are capped at this order.
inline constexpr int kMaxBruteforceOrder = 28;

/// Every subgroup of g, each exactly once, built by closing unions of cyclic
/// subgroups layer by layer. Output is sorted by (order, member list), so it
/// is deterministic and independent of scheduling. The expansion of each
/// layer runs across OpenMP threads.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Serial reference for all_subgroups; kept for tests and benchmarks.
std::vector<Subgroup> all_subgroups_serial(const FiniteGroup& g);

struct MinimalAbelianIndex {
  int index;
  Subgroup witness;
};

/// Smallest index of an abelian subgroup, with a witness attaining it.
/// Ties are broken by the lexicographically largest member list. Abelian
/// groups short-circuit to (1, g) without enumerating the lattice.
MinimalAbelianIndex minimal_abelian_index(const FiniteGroup& g);

/// Brute-force cross-check of minimal_abelian_index: scans every subset of
/// the group (as bitmasks) for closed abelian subsets, keeping the largest.
/// Only the index is returned. Feasible for order <= 28; OpenMP-parallel
/// over mask blocks.
int bruteforce_minimal_abelian_index(const FiniteGroup& g);

/// Serial reference for the subset scan; kept for tests and benchmarks.
int bruteforce_minimal_abelian_index_serial(const FiniteGroup& g);

}  // namespace hopfjordan::groupcore
