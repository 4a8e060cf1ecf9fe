#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gaingraph/analysis.hpp"
#include "gaingraph/coefficients.hpp"
#include "gaingraph/elementary.hpp"
#include "gaingraph/generate.hpp"

namespace gaingraph {

SymmetryReport symmetry_analysis(const GainGraph& g, double tol, int max_n) {
  SymmetryReport r;
  Spectrum spec = eigenvalues(adjacency_matrix(g));
  r.spectrum_symmetric = spectrum_symmetric(spec, tol);
  r.bipartite = is_bipartite(g);

  for (int len = 3; len <= g.vertex_count(); len += 2) {
    double sum = sum_re_cycles(g, len, max_n);
    r.odd_cycle_sums.emplace_back(len, sum);
    if (r.smallest_odd_cycle_length == 0) {
      bool any = false;
      for_each_cycle(g, len, [&](const std::vector<int>&) { any = true; });
      if (any) r.smallest_odd_cycle_length = len;
    }
  }

  r.consistent = true;
  if (r.bipartite && !r.spectrum_symmetric) r.consistent = false;
  if (r.spectrum_symmetric && !r.bipartite && r.smallest_odd_cycle_length > 0) {
    double sum = 0.0;
    for (const auto& [len, value] : r.odd_cycle_sums)
      if (len == r.smallest_odd_cycle_length) sum = value;
    // Symmetry without bipartiteness is only possible when the shortest
    // odd cycles cancel.
    if (std::fabs(sum) > tol) r.consistent = false;
  }
  return r;
}

CompleteBipartiteReport complete_bipartite_check(const GainGraph& g, double tol) {
  auto parts = bipartition(g);
  if (!parts) throw std::invalid_argument("complete_bipartite_check: graph has an odd cycle");
  const int p = static_cast<int>(parts->left.size());
  const int q = static_cast<int>(parts->right.size());
  for (int u : parts->left)
    for (int v : parts->right)
      if (!g.adjacent(u, v))
        throw std::invalid_argument("complete_bipartite_check: missing cross edge");
  if (g.edge_count() != p * q)
    throw std::invalid_argument("complete_bipartite_check: not complete bipartite");

  CompleteBipartiteReport r;
  r.p = p;
  r.q = q;
  r.bound = std::sqrt(static_cast<double>(p) * q);
  r.lambda_1 = eigenvalues(adjacency_matrix(g)).lambda_max();
  r.equality = std::fabs(r.lambda_1 - r.bound) <= tol;
  r.balanced = is_balanced(g);
  r.consistent = (r.equality == r.balanced);
  return r;
}

BalanceReport rho_comparison(const GainGraph& g, double tol) {
  if (!is_connected(g)) throw std::invalid_argument("rho_comparison: graph must be connected");

  BalanceReport r;
  r.balanced = is_balanced(g);
  r.antibalanced = is_balanced(negated(g));
  Spectrum phi = eigenvalues(adjacency_matrix(g));
  Spectrum plain = eigenvalues(adjacency_matrix(underlying(g)));
  r.rho_phi = phi.spectral_radius();
  r.rho_g = plain.spectral_radius();

  double threshold = tol * std::max(1.0, r.rho_g);
  if (r.rho_phi > r.rho_g + threshold)
    throw std::logic_error("rho_comparison: gained radius exceeds the underlying radius");

  r.radius_equal_numeric = std::fabs(r.rho_phi - r.rho_g) <= threshold;
  bool combinatorial = r.balanced || r.antibalanced;
  r.threshold_conflict = (r.radius_equal_numeric != combinatorial);
  r.radius_equal = r.threshold_conflict ? combinatorial : r.radius_equal_numeric;
  r.cospectral_with_underlying = spectra_equal(phi, plain, tol);
  return r;
}

bool cospectrality_check(const GainGraph& g, double tol) {
  if (!is_connected(g)) throw std::invalid_argument("cospectrality_check: graph must be connected");
  Spectrum phi = eigenvalues(adjacency_matrix(g));
  Spectrum plain = eigenvalues(adjacency_matrix(underlying(g)));
  return spectra_equal(phi, plain, tol);
}

BipartiteProbeReport bipartite_characterization_probe(const GainGraph& g, int trials,
                                                      std::uint64_t seed, double tol) {
  if (!is_connected(g))
    throw std::invalid_argument("bipartite_characterization_probe: graph must be connected");
  if (trials < 1)
    throw std::invalid_argument("bipartite_characterization_probe: need at least one trial");

  BipartiteProbeReport r;
  r.bipartite = is_bipartite(g);
  Spectrum plain = eigenvalues(adjacency_matrix(underlying(g)));
  double threshold = tol * std::max(1.0, plain.spectral_radius());

  std::mt19937_64 rng(seed);
  auto probe_one = [&](const GainGraph& phi_graph) {
    ++r.samples;
    Spectrum phi = eigenvalues(adjacency_matrix(phi_graph));
    if (std::fabs(phi.spectral_radius() - plain.spectral_radius()) > threshold) return;
    ++r.radius_equal_count;
    if (!spectra_equal(phi, plain, tol)) ++r.implication_failures;
  };

  probe_one(underlying(g));
  probe_one(with_constant_gains(g, UnitGain(1.0)));
  for (int t = 0; t < trials; ++t) probe_one(with_random_gains(g, rng));

  r.implication_held = (r.implication_failures == 0);
  r.consistent = (r.implication_held == r.bipartite);
  return r;
}

}  // namespace gaingraph
