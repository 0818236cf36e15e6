#include "hopfjordan/subgroup_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace hopfjordan::groupcore {

namespace {

std::vector<int> closed_union(const FiniteGroup& g, const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> seed;
  seed.reserve(a.size() + b.size());
  seed.insert(seed.end(), a.begin(), a.end());
  seed.insert(seed.end(), b.begin(), b.end());
  return generated_subgroup(g, seed).members;
}

std::vector<std::vector<int>> cyclic_atoms(const FiniteGroup& g) {
  std::set<std::vector<int>> atoms;
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> cyc{g.identity()};
    int x = a;
    while (x != g.identity()) {
      cyc.push_back(x);
      x = g.mul(x, a);
    }
    std::sort(cyc.begin(), cyc.end());
    atoms.insert(std::move(cyc));
  }
  return {atoms.begin(), atoms.end()};
}

void require_lattice_order(const FiniteGroup& g) {
  if (g.order() > kMaxLatticeOrder) {
    throw DomainError(ErrorKind::UnsupportedSize,
                      "subgroup enumeration supports order <= " +
                          std::to_string(kMaxLatticeOrder));
  }
}

std::vector<Subgroup> finish_lattice(std::set<std::vector<int>> found) {
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& members : found) out.push_back(Subgroup{members});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups_serial(const FiniteGroup& g) {
  require_lattice_order(g);
  const std::vector<std::vector<int>> atoms = cyclic_atoms(g);
  std::set<std::vector<int>> found;
  found.insert(std::vector<int>{g.identity()});
  std::vector<std::vector<int>> frontier;
  for (const auto& atom : atoms)
    if (found.insert(atom).second) frontier.push_back(atom);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier) {
      for (const auto& atom : atoms) {
        std::vector<int> candidate = closed_union(g, base, atom);
        if (found.insert(candidate).second) next.push_back(std::move(candidate));
      }
    }
    frontier = std::move(next);
  }
  return finish_lattice(std::move(found));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  require_lattice_order(g);
  const std::vector<std::vector<int>> atoms = cyclic_atoms(g);
  std::set<std::vector<int>> found;
  found.insert(std::vector<int>{g.identity()});
  std::vector<std::vector<int>> frontier;
  for (const auto& atom : atoms)
    if (found.insert(atom).second) frontier.push_back(atom);
  while (!frontier.empty()) {
    const int tasks = static_cast<int>(frontier.size() * atoms.size());
    std::vector<std::vector<int>> candidates(static_cast<size_t>(tasks));
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < tasks; ++t) {
      const auto& base = frontier[static_cast<size_t>(t) / atoms.size()];
      const auto& atom = atoms[static_cast<size_t>(t) % atoms.size()];
      candidates[static_cast<size_t>(t)] = closed_union(g, base, atom);
    }
    std::vector<std::vector<int>> next;
    for (auto& candidate : candidates) {
      if (found.insert(candidate).second) next.push_back(std::move(candidate));
    }
    frontier = std::move(next);
  }
  return finish_lattice(std::move(found));
}

MinimalAbelianIndex minimal_abelian_index(const FiniteGroup& g) {
  if (g.is_abelian()) return {1, full_subgroup(g)};
  const std::vector<Subgroup> lattice = all_subgroups(g);
  const std::vector<int>* best = nullptr;
  for (const Subgroup& s : lattice) {
    if (!is_abelian_subset(g, s.members)) continue;
    if (best == nullptr || s.members.size() > best->size() ||
        (s.members.size() == best->size() && s.members > *best)) {
      best = &s.members;
    }
  }
  // the trivial subgroup is abelian, so a witness always exists
  Subgroup witness{*best};
  return {g.order() / witness.order(), std::move(witness)};
}

namespace {

// Flattened table plus identity bit; shared by both subset scans.
struct ScanContext {
  int n;
  int identity;
  std::vector<int> flat;

  explicit ScanContext(const FiniteGroup& g) : n(g.order()), identity(g.identity()) {
    flat.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = g.mul(i, j);
  }

  // Membership of every product and pairwise commutation, straight off the mask.
  bool closed_and_abelian(std::uint32_t mask) const {
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (int j = i; j < n; ++j) {
        if (!(mask >> j & 1u)) continue;
        const int ij = flat[static_cast<size_t>(i) * n + j];
        const int ji = flat[static_cast<size_t>(j) * n + i];
        if (ij != ji) return false;
        if (!(mask >> ij & 1u)) return false;
      }
    }
    return true;
  }
};

int scan_block(const ScanContext& ctx, std::uint64_t begin, std::uint64_t end) {
  int best = 1;
  const std::uint32_t id_bit = 1u << ctx.identity;
  for (std::uint64_t m = begin; m < end; ++m) {
    const std::uint32_t mask = static_cast<std::uint32_t>(m);
    if (!(mask & id_bit)) continue;
    const int size = std::popcount(mask);
    if (size <= best || ctx.n % size != 0) continue;
    if (ctx.closed_and_abelian(mask)) best = size;
  }
  return best;
}

void require_bruteforce_order(const FiniteGroup& g) {
  if (g.order() > kMaxBruteforceOrder) {
    throw DomainError(ErrorKind::UnsupportedSize,
                      "subset scan supports order <= " + std::to_string(kMaxBruteforceOrder));
  }
}

}  // namespace

int bruteforce_minimal_abelian_index_serial(const FiniteGroup& g) {
  require_bruteforce_order(g);
  const ScanContext ctx(g);
  const std::uint64_t total = std::uint64_t{1} << ctx.n;
  const int best = scan_block(ctx, 0, total);
  return g.order() / best;
}

int bruteforce_minimal_abelian_index(const FiniteGroup& g) {
  require_bruteforce_order(g);
  const ScanContext ctx(g);
  const std::uint64_t total = std::uint64_t{1} << ctx.n;
  constexpr std::uint64_t kBlock = 1u << 16;
  const std::int64_t blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
  int best = 1;
#pragma omp parallel for schedule(dynamic) reduction(max : best)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = std::min(total, begin + kBlock);
    best = std::max(best, scan_block(ctx, begin, end));
  }
  return g.order() / best;
}

}  // namespace hopfjordan::groupcore
