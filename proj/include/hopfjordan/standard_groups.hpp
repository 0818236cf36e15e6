#pragma once

#include "hopfjordan/complex_matrix.hpp"
#include "hopfjordan/finite_group.hpp"

namespace hopfjordan::groupcore {

/// Cyclic group of order n; element i is x^i, so index arithmetic is mod n.
FiniteGroup make_cyclic(int n);

/// Dihedral group of order 2n (n >= 1): indices < n are rotations, >= n
/// reflections.
FiniteGroup make_dihedral(int n);

FiniteGroup make_klein_four();

/// Quaternion group of order 8; element order is 1, -1, i, -i, j, -j, k, -k.
FiniteGroup make_q8();

/// Permutation groups built by closing generators (exact equality).
FiniteGroup make_s3();
FiniteGroup make_a4();
FiniteGroup make_s4();

using Permutation = std::vector<int>;
Closure<Permutation> permutation_closure(const std::vector<Permutation>& generators, int points,
                                         int cap);

/// Closure of complex matrices with tolerance-based deduplication.
Closure<ComplexMatrix> matrix_closure(const std::vector<ComplexMatrix>& generators,
                                      const Tolerance& tol, int cap);

// 2x2 generator sets used by the model corpus and tests.
ComplexMatrix rotation4();                         // order-4 rotation [[0,-1],[1,0]]
std::vector<ComplexMatrix> quaternion_generators();        // closes to Q8
std::vector<ComplexMatrix> binary_dihedral16_generators(); // closes to the order-16 group
std::vector<ComplexMatrix> s3_representation_generators(); // closes to S3

}  // namespace hopfjordan::groupcore
