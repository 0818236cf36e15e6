#include "hopfjordan/standard_groups.hpp"

#include <cmath>
#include <numbers>

namespace hopfjordan::groupcore {

FiniteGroup make_cyclic(int n) {
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  return FiniteGroup::from_table(std::move(table), 0);
}

FiniteGroup make_dihedral(int n) {
  const int order = 2 * n;
  auto compose = [n](int x, int y) {
    if (x < n && y < n) return (x + y) % n;
    if (x < n) return (y + x) % n + n;          // rotation * reflection
    if (y < n) return (x - y + n) % n + n;      // reflection * rotation
    return (x - y + 2 * n) % n;                 // reflection * reflection
  };
  std::vector<std::vector<int>> table(static_cast<size_t>(order),
                                      std::vector<int>(static_cast<size_t>(order)));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) table[static_cast<size_t>(i)][static_cast<size_t>(j)] = compose(i, j);
  return FiniteGroup::from_table(std::move(table), 0);
}

FiniteGroup make_klein_four() {
  std::vector<std::vector<int>> table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return FiniteGroup::from_table(std::move(table), 0);
}

FiniteGroup make_q8() {
  // elements (s, a): sign s in {0,1} (for +,-), axis a in {1,i,j,k}=0..3
  auto idx = [](int sign, int axis) { return axis * 2 + sign; };
  // i*j=k, j*k=i, k*i=j with anticommutation
  auto axis_mul = [](int a, int b, int& sign) {
    if (a == 0) { sign = 0; return b; }
    if (b == 0) { sign = 0; return a; }
    if (a == b) { sign = 1; return 0; }
    // a != b, both in {1,2,3}
    static const int prod[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static const int sgn[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    sign = sgn[a][b];
    return prod[a][b];
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          int sign;
          const int axis = axis_mul(a, b, sign);
          table[static_cast<size_t>(idx(sa, a))][static_cast<size_t>(idx(sb, b))] =
              idx((sa + sb + sign) % 2, axis);
        }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(std::move(table), 0, std::move(labels));
}

Closure<Permutation> permutation_closure(const std::vector<Permutation>& generators, int points,
                                         int cap) {
  Permutation id(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) id[static_cast<size_t>(i)] = i;
  auto mul = [](const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
    return r;
  };
  auto eq = [](const Permutation& p, const Permutation& q) { return p == q; };
  return closure_from_generators(generators, id, mul, eq, cap);
}

FiniteGroup make_s3() {
  return permutation_closure({{1, 0, 2}, {1, 2, 0}}, 3, 8).group;
}

FiniteGroup make_a4() {
  return permutation_closure({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4, 16).group;
}

FiniteGroup make_s4() {
  return permutation_closure({{1, 0, 2, 3}, {1, 2, 3, 0}}, 4, 32).group;
}

Closure<ComplexMatrix> matrix_closure(const std::vector<ComplexMatrix>& generators,
                                      const Tolerance& tol, int cap) {
  if (generators.empty()) {
    throw DomainError(ErrorKind::ContractViolation, "matrix closure needs generators");
  }
  const int n = generators.front().dim();
  for (const ComplexMatrix& g : generators) {
    if (g.dim() != n) throw DomainError(ErrorKind::ShapeMismatch, "generator dimensions differ");
  }
  auto mul = [](const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; };
  auto eq = [eps = tol.residual_eps](const ComplexMatrix& a, const ComplexMatrix& b) {
    return approx_equal(a, b, eps);
  };
  return closure_from_generators(generators, ComplexMatrix::identity(n), mul, eq, cap);
}

ComplexMatrix rotation4() {
  return ComplexMatrix(2, {Complex(0.0), Complex(-1.0), Complex(1.0), Complex(0.0)});
}

std::vector<ComplexMatrix> quaternion_generators() {
  const Complex i(0.0, 1.0);
  return {ComplexMatrix(2, {i, Complex(0.0), Complex(0.0), -i}), rotation4()};
}

std::vector<ComplexMatrix> binary_dihedral16_generators() {
  const double angle = std::numbers::pi / 4.0;
  const Complex zeta = std::polar(1.0, angle);
  return {ComplexMatrix(2, {zeta, Complex(0.0), Complex(0.0), std::conj(zeta)}), rotation4()};
}

std::vector<ComplexMatrix> s3_representation_generators() {
  const double angle = 2.0 * std::numbers::pi / 3.0;
  const double c = std::cos(angle), s = std::sin(angle);
  ComplexMatrix rot(2, {Complex(c), Complex(-s), Complex(s), Complex(c)});
  ComplexMatrix flip(2, {Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)});
  return {rot, flip};
}

}  // namespace hopfjordan::groupcore
