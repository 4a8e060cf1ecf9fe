#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gaingraph/coefficients.hpp"
#include "gaingraph/elementary.hpp"
#include "gaingraph/errors.hpp"

namespace gaingraph {

namespace {

double re_cycle_product(const GainGraph& g, const ElementarySubgraph& h) {
  double prod = 1.0;
  for (const auto& c : h.cycles) prod *= cycle_gain(g, c).re();
  return prod;
}

}  // namespace

RealPolynomial char_coeffs_combinatorial(const GainGraph& g, int max_n) {
  const int n = g.vertex_count();
  std::vector<double> a(static_cast<size_t>(n) + 1, 0.0);
  a[0] = 1.0;
  for_each_elementary_subgraph(
      g,
      [&](const ElementarySubgraph& h) {
        double sign = (h.component_count() % 2 == 0) ? 1.0 : -1.0;
        double weight = sign * std::ldexp(1.0, h.cycle_count()) * re_cycle_product(g, h);
        a[static_cast<size_t>(h.vertex_count())] += weight;
      },
      max_n);
  return RealPolynomial(std::move(a));
}

RealPolynomial perm_coeffs_combinatorial(const GainGraph& g, int max_n) {
  const int n = g.vertex_count();
  std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
  b[0] = 1.0;
  for_each_elementary_subgraph(
      g,
      [&](const ElementarySubgraph& h) {
        int i = h.vertex_count();
        double sign = (i % 2 == 0) ? 1.0 : -1.0;
        double weight = sign * std::ldexp(1.0, h.cycle_count()) * re_cycle_product(g, h);
        b[static_cast<size_t>(i)] += weight;
      },
      max_n);
  return RealPolynomial(std::move(b));
}

double sum_re_cycles(const GainGraph& g, int length, int max_n) {
  if (length < 3)
    throw std::invalid_argument("sum_re_cycles: cycle length must be at least 3");
  if (g.vertex_count() > max_n)
    throw CapExceeded(
        "sum_re_cycles: order " + std::to_string(g.vertex_count()) + " exceeds cap", max_n);
  double total = 0.0;
  for_each_cycle(g, length,
                 [&](const std::vector<int>& c) { total += cycle_gain(g, c).re(); });
  return total;
}

double det_combinatorial(const GainGraph& g, int max_n) {
  const int n = g.vertex_count();
  double an = char_coeffs_combinatorial(g, max_n).coefficient(n);
  return (n % 2 == 0) ? an : -an;
}

double per_combinatorial(const GainGraph& g, int max_n) {
  const int n = g.vertex_count();
  double bn = perm_coeffs_combinatorial(g, max_n).coefficient(n);
  return (n % 2 == 0) ? bn : -bn;
}

UnicyclicReport unicyclic_analysis(const GainGraph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g) || g.edge_count() != n)
    throw std::invalid_argument("unicyclic_analysis: graph is not connected with exactly one cycle");

  SpanningForest f = spanning_forest(g);
  if (f.cotree_edges.size() != 1)
    throw std::logic_error("unicyclic_analysis: expected a single co-tree edge");
  std::vector<int> cycle = fundamental_cycle(g, f, f.cotree_edges.front());

  // Canonicalize: smallest vertex first, then the direction with the
  // smaller second vertex.
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() >= 3 && cycle[1] > cycle.back())
    std::reverse(cycle.begin() + 1, cycle.end());

  UnicyclicReport r;
  r.cycle = cycle;
  r.cycle_length = static_cast<int>(cycle.size());
  r.cycle_cos = cycle_gain(g, cycle).re();

  // The graph minus the cycle's vertices, relabelled to 0..n-len-1.
  std::vector<char> on_cycle(n, 0);
  for (int v : cycle) on_cycle[v] = 1;
  std::vector<int> relabel(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!on_cycle[v]) relabel[v] = next++;
  std::vector<GainEdge> rest_edges;
  for (const GainEdge& e : g.edges())
    if (!on_cycle[e.u] && !on_cycle[e.v])
      rest_edges.push_back({relabel[e.u], relabel[e.v], e.gain});
  GainGraph rest(next, std::move(rest_edges));
  r.rest_matchings = matching_table(rest);

  // Polynomials of the neutral graph, then the correction 2(1 - cos)
  // applied at degrees x^{n - len - 2i}; the permanental twin carries an
  // extra (-1)^{len+1}.
  GainGraph neutral = underlying(g);
  std::vector<double> a = char_coeffs_combinatorial(neutral).coefficients();
  std::vector<double> b = perm_coeffs_combinatorial(neutral).coefficients();
  const int len = r.cycle_length;
  const double factor = 2.0 * (1.0 - r.cycle_cos);
  const double perm_sign = (len % 2 == 0) ? -1.0 : 1.0;
  for (size_t i = 0; i < r.rest_matchings.size(); ++i) {
    size_t idx = static_cast<size_t>(len) + 2 * i;
    if (idx > static_cast<size_t>(n)) break;
    double mi = static_cast<double>(r.rest_matchings[i]);
    double alt = (i % 2 == 0) ? 1.0 : -1.0;
    a[idx] += factor * alt * mi;
    b[idx] += factor * perm_sign * mi;
  }
  r.char_poly = RealPolynomial(std::move(a));
  r.perm_poly = RealPolynomial(std::move(b));

  // Constant-term effect: present exactly when the rest has a perfect
  // matching (2k = n - len); the determinant picks up (-1)^{len+k} and the
  // permanent always loses 2 m_k (1 - cos).
  int k = 0;
  for (size_t i = 0; i < r.rest_matchings.size(); ++i)
    if (r.rest_matchings[i] > 0) k = static_cast<int>(i);
  r.perfect_matching_case = (2 * k == n - len);
  if (r.perfect_matching_case) {
    double mk = static_cast<double>(r.rest_matchings[static_cast<size_t>(k)]);
    double det_sign = ((len + k) % 2 == 0) ? 1.0 : -1.0;
    r.det_shift = det_sign * factor * mk;
    r.per_shift = -factor * mk;
  }
  return r;
}

RealPolynomial unicyclic_char_poly(const GainGraph& g) { return unicyclic_analysis(g).char_poly; }

RealPolynomial unicyclic_perm_poly(const GainGraph& g) { return unicyclic_analysis(g).perm_poly; }

GainGraph star_of_triangles(int m, const std::vector<UnitGain>& thetas) {
  if (m < 1) throw std::invalid_argument("star_of_triangles: need at least one triangle");
  if (static_cast<int>(thetas.size()) != m)
    throw std::invalid_argument("star_of_triangles: one angle per triangle required");
  std::vector<GainEdge> edges;
  edges.reserve(static_cast<size_t>(3 * m));
  for (int l = 0; l < m; ++l) {
    int a = 2 * l + 1, b = 2 * l + 2;
    edges.push_back({0, a, UnitGain(0.0)});
    edges.push_back({0, b, UnitGain(0.0)});
    edges.push_back({a, b, thetas[static_cast<size_t>(l)]});
  }
  return GainGraph(2 * m + 1, std::move(edges));
}

double star_alpha(const std::vector<UnitGain>& thetas) {
  double alpha = 0.0;
  for (const UnitGain& t : thetas) alpha += t.re();
  return 2.0 * alpha;
}

}  // namespace gaingraph
