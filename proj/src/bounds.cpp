#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gaingraph/bounds.hpp"
#include "gaingraph/linalg.hpp"

namespace gaingraph {

ExtremeBounds edge_count_bounds(int n, int m) {
  if (n < 2) throw std::invalid_argument("edge_count_bounds: need at least two vertices");
  if (m < 0 || m > n * (n - 1) / 2)
    throw std::invalid_argument("edge_count_bounds: edge count out of range");
  double lo = std::sqrt(2.0 * m / (static_cast<double>(n) * (n - 1)));
  double hi = std::sqrt(2.0 * m * (n - 1) / static_cast<double>(n));
  return {{lo, hi}, {-hi, -lo}};
}

ExtremeBounds wolkowicz_bounds(const ComplexMatrix& h) {
  const int n = h.order();
  if (n < 2) throw std::invalid_argument("wolkowicz_bounds: need order at least two");
  double scale = std::max(1.0, h.max_abs());
  if (h.hermitian_defect() > 1e-10 * scale)
    throw std::invalid_argument("wolkowicz_bounds: matrix is not Hermitian within tolerance");

  double r = h.trace().real() / n;
  // trace(B^2) = sum |b_ij|^2 for Hermitian B.
  double trace_sq = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) trace_sq += std::norm(h(i, j));
  double s = std::sqrt(std::max(0.0, trace_sq / n - r * r));

  double root = std::sqrt(static_cast<double>(n - 1));
  return {{r + s / root, r + s * root}, {r - s * root, r - s / root}};
}

double triangle_bound(const GainGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (int k = j + 1; k < n; ++k)
        if (g.adjacent(j, k) && g.adjacent(i, k)) sum += cycle_gain(g, {i, j, k}).re();
    }
  return std::cbrt(6.0 * sum / n);
}

double degree_pair_bound(const GainGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("degree_pair_bound: need at least two vertices");
  ComplexMatrix w = walk_gain_matrix(g, 2);
  double best = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double di = g.degree(i), dj = g.degree(j);
      double inner = std::sqrt((di - dj) * (di - dj) + 4.0 * std::norm(w(i, j)));
      best = std::max(best, std::sqrt(di + dj + inner));
    }
  return best / std::sqrt(2.0);
}

BoundsReport bounds_report(const GainGraph& g, double slack) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("bounds_report: need at least two vertices");

  ExtremeBounds ec = edge_count_bounds(n, g.edge_count());
  Spectrum spec = eigenvalues(adjacency_matrix(g));

  BoundsReport r;
  r.lambda_1_interval = ec.lambda_1;
  r.lambda_n_interval = ec.lambda_n;
  r.triangle_lower_bound = triangle_bound(g);
  r.degree_pair_lower_bound = degree_pair_bound(g);
  r.lambda_1 = spec.lambda_max();
  r.lambda_n = spec.lambda_min();
  r.sigma = spec.spectral_radius();
  r.all_satisfied = r.lambda_1_interval.contains(r.lambda_1, slack) &&
                    r.lambda_n_interval.contains(r.lambda_n, slack) &&
                    r.lambda_1 >= r.triangle_lower_bound - slack &&
                    r.sigma >= r.degree_pair_lower_bound - slack;
  return r;
}

}  // namespace gaingraph
