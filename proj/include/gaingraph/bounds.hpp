#pragma once

#include "gaingraph/gain_graph.hpp"
#include "gaingraph/matrix.hpp"

namespace gaingraph {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
  double width() const { return hi - lo; }
};

// Two-sided enclosures for the extreme eigenvalues.
struct ExtremeBounds {
  Interval lambda_1;
  Interval lambda_n;
};

// Intervals depending only on order and edge count:
//   lambda_1 in [sqrt(2m/(n(n-1))), sqrt(2m(n-1)/n)]
// and the mirror image for lambda_n. Tight on all-1 / all-(-1) K_n.
ExtremeBounds edge_count_bounds(int n, int m);

// Mean/spread intervals for any Hermitian matrix, from r = trace/n and
// s^2 = trace(B^2)/n - r^2:
//   lambda_1 in [r + s/sqrt(n-1), r + s*sqrt(n-1)], lambda_n mirrored.
ExtremeBounds wolkowicz_bounds(const ComplexMatrix& h);

// Signed cube root of (6/n) * sum of Re(gain) over all triangles; a lower
// bound for lambda_1. Direct O(n^3) scan, no size cap.
double triangle_bound(const GainGraph& g);

// Lower bound for sigma = max |lambda_i| from the best vertex pair:
// (1/sqrt2) * max_{i<j} sqrt(d_i + d_j + sqrt((d_i-d_j)^2 + 4|w_ij|^2))
// where w is the 2-step walk gain matrix.
double degree_pair_bound(const GainGraph& g);

struct BoundsReport {
  Interval lambda_1_interval;
  Interval lambda_n_interval;
  double triangle_lower_bound = 0.0;
  double degree_pair_lower_bound = 0.0;
  double lambda_1 = 0.0;
  double lambda_n = 0.0;
  double sigma = 0.0;
  bool all_satisfied = false;
};

// Evaluates every bound against the computed spectrum with the given slack.
BoundsReport bounds_report(const GainGraph& g, double slack = 1e-9);

}  // namespace gaingraph
