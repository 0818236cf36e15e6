#include "hopfjordan/hopf_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <random>

namespace hopfjordan::hopfpipe {

namespace {

bool generators_well_formed(const LinearHopfModel& model) {
  if (model.dimension < 2 || model.generators.empty()) return false;
  if (model.contraction_index < 0 ||
      model.contraction_index >= static_cast<int>(model.generators.size()))
    return false;
  for (const ComplexMatrix& g : model.generators)
    if (g.dim() != model.dimension) return false;
  return true;
}

std::vector<std::vector<Complex>> orbit_sample_points(int dimension, std::uint64_t seed) {
  std::vector<std::vector<Complex>> points;
  for (int i = 0; i < dimension; ++i) {
    std::vector<Complex> e(static_cast<size_t>(dimension), Complex(0.0));
    e[static_cast<size_t>(i)] = 1.0;
    points.push_back(std::move(e));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int s = 0; s < kOrbitSampleCount; ++s) {
    std::vector<Complex> x(static_cast<size_t>(dimension));
    for (auto& v : x) v = Complex(coord(rng), coord(rng));
    points.push_back(std::move(x));
  }
  return points;
}

}  // namespace

std::vector<Certificate> validate_model(const LinearHopfModel& model, const Tolerance& tol,
                                        std::uint64_t orbit_seed) {
  tol.validate();
  std::vector<Certificate> certs;
  const bool shape_ok = generators_well_formed(model);
  certs.push_back({"model.shape", shape_ok, 0.0,
                   shape_ok ? "n >= 2, square generators, contraction index in range"
                            : "dimension, generator shapes, or contraction index invalid"});
  if (!shape_ok) return certs;

  double min_abs_det = std::numeric_limits<double>::infinity();
  for (const ComplexMatrix& g : model.generators)
    min_abs_det = std::min(min_abs_det, std::abs(g.determinant()));
  const bool invertible = min_abs_det > 100.0 * tol.residual_eps;
  certs.push_back({"model.generator_invertibility", invertible, min_abs_det,
                   "smallest |det| over the generators"});

  const ComplexMatrix& g = model.contraction();
  const bool contracting = spectra::is_linear_contraction(g, tol);
  certs.push_back({"model.contraction_spectrum", contracting, 0.0,
                   "all eigenvalue moduli of g below 1"});

  bool orbits_ok = true;
  if (contracting) {
    const auto points = orbit_sample_points(model.dimension, orbit_seed);
    std::vector<char> converged(points.size(), 0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      converged[static_cast<size_t>(i)] =
          spectra::orbit_converges(g, points[static_cast<size_t>(i)], kOrbitMaxIter, tol) ? 1 : 0;
    }
    orbits_ok = std::all_of(converged.begin(), converged.end(), [](char c) { return c != 0; });
  } else {
    orbits_ok = false;
  }
  certs.push_back({"model.orbit_convergence", orbits_ok, 0.0,
                   "g-orbits of basis and sampled points reach the residual ball"});

  // <g> normal. Conjugation preserves |det|, so the only possible exponent in
  // A g A^-1 = g^k is k = 1; centrality of g is therefore the check.
  double worst = 0.0;
  if (invertible) {
    for (const ComplexMatrix& a : model.generators) {
      worst = std::max(worst, max_norm_diff(a * g, g * a));
    }
  }
  const bool normal = invertible && worst <= 10.0 * tol.residual_eps * std::max(1.0, g.max_norm());
  certs.push_back({"model.gamma_normality", normal, worst,
                   "max ||A g - g A|| over the generators"});
  return certs;
}

void require_valid(const LinearHopfModel& model, const Tolerance& tol,
                   std::uint64_t orbit_seed) {
  for (const Certificate& c : validate_model(model, tol, orbit_seed)) {
    if (!c.passed) {
      throw DomainError(ErrorKind::InvalidModel, "certificate failed: " + c.name);
    }
  }
}

ExtensionModel build_extension_model(const LinearHopfModel& model, const Tolerance& tol) {
  require_valid(model, tol);
  const ComplexMatrix& g = model.contraction();
  const double log_det_g = std::log(std::abs(g.determinant()));
  if (std::abs(log_det_g) < 100.0 * tol.residual_eps) {
    throw DomainError(ErrorKind::IllConditionedModel,
                      "|det g| too close to 1 to separate deck-group exponents");
  }

  // membership test for the cyclic group <g>: the determinant logarithm
  // proposes the unique exponent candidate, an exact comparison confirms it
  std::map<long long, ComplexMatrix> g_powers;
  auto g_power = [&](long long k) -> const ComplexMatrix& {
    auto it = g_powers.find(k);
    if (it == g_powers.end()) it = g_powers.emplace(k, g.power(k)).first;
    return it->second;
  };
  auto gamma_exponent = [&](const ComplexMatrix& d) -> std::optional<long long> {
    const double det_abs = std::abs(d.determinant());
    if (det_abs <= 0.0) return std::nullopt;
    const double ratio = std::log(det_abs) / log_det_g;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 0.25) return std::nullopt;
    const long long k = static_cast<long long>(rounded);
    const ComplexMatrix& gk = g_power(k);
    if (max_norm_diff(d, gk) <= 10.0 * tol.residual_eps * std::max(1.0, gk.max_norm())) return k;
    return std::nullopt;
  };

  std::vector<ComplexMatrix> reps{ComplexMatrix::identity(model.dimension)};
  std::vector<ComplexMatrix> rep_invs{ComplexMatrix::identity(model.dimension)};
  // locate the coset of p among the known representatives
  auto find_coset = [&](const ComplexMatrix& p) -> std::optional<std::pair<int, long long>> {
    for (size_t j = 0; j < reps.size(); ++j) {
      if (auto k = gamma_exponent(rep_invs[j] * p)) return std::pair{static_cast<int>(j), *k};
    }
    return std::nullopt;
  };

  for (size_t i = 0; i < reps.size(); ++i) {
    for (const ComplexMatrix& a : model.generators) {
      ComplexMatrix p = reps[i] * a;
      if (find_coset(p)) continue;
      rep_invs.push_back(p.inverse());
      reps.push_back(std::move(p));
      if (static_cast<int>(reps.size()) > model.quotient_cap) {
        throw DomainError(ErrorKind::InfiniteQuotient,
                          "coset enumeration exceeded quotient_cap = " +
                              std::to_string(model.quotient_cap));
      }
    }
  }

  const int order = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(order),
                                      std::vector<int>(static_cast<size_t>(order)));
  std::vector<std::vector<long long>> cocycle(static_cast<size_t>(order),
                                              std::vector<long long>(static_cast<size_t>(order)));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const auto hit = find_coset(reps[static_cast<size_t>(i)] * reps[static_cast<size_t>(j)]);
      if (!hit) {
        throw DomainError(ErrorKind::ModelInconsistency,
                          "coset set is not closed under multiplication");
      }
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = hit->first;
      cocycle[static_cast<size_t>(i)][static_cast<size_t>(j)] = hit->second;
    }
  }

  ExtensionModel out;
  out.extension = groupcore::CentralExtensionZ::central(
      groupcore::FiniteGroup::from_table(std::move(table), 0), std::move(cocycle));
  for (const ComplexMatrix& a : model.generators) {
    const auto hit = find_coset(a);
    if (!hit) {
      throw DomainError(ErrorKind::ModelInconsistency,
                        "generator does not belong to any enumerated coset");
    }
    out.generator_elements.push_back({hit->second, hit->first});
  }
  out.representatives = std::move(reps);
  return out;
}

}  // namespace hopfjordan::hopfpipe
