#pragma once

#include <vector>

#include "gaingraph/gain_graph.hpp"
#include "gaingraph/linalg.hpp"
#include "gaingraph/matrix.hpp"

namespace gaingraph {

// Characteristic coefficients by summing over elementary subgraphs:
// a_i = sum over i-vertex H of (-1)^{components} 2^{cycles} prod Re(gain(C)).
RealPolynomial char_coeffs_combinatorial(const GainGraph& g, int max_n = kEnumerationCap);

// Permanental coefficients by the same walk with the alternating sign moved
// to the subgraph size: b_i = (-1)^i sum over H of 2^{cycles} prod Re(gain(C)).
RealPolynomial perm_coeffs_combinatorial(const GainGraph& g, int max_n = kEnumerationCap);

// Sum of Re(gain) over all simple cycles of the given length, each counted
// once; orientation does not matter because Re is conjugation-invariant.
double sum_re_cycles(const GainGraph& g, int length, int max_n = kEnumerationCap);

// Determinant / permanent through the top combinatorial coefficient:
// det A = (-1)^n a_n, per A = (-1)^n b_n.
double det_combinatorial(const GainGraph& g, int max_n = kEnumerationCap);
double per_combinatorial(const GainGraph& g, int max_n = kEnumerationCap);

// Connected graph with exactly one cycle: both gained polynomials are the
// neutral ones plus a correction supported on the cycle, with everything
// the correction needs (cycle, its cosine, matchings of the rest) reported.
struct UnicyclicReport {
  std::vector<int> cycle;                // canonical vertex order
  int cycle_length = 0;
  double cycle_cos = 1.0;                // Re of the cycle gain
  std::vector<long long> rest_matchings; // m_i of the graph minus the cycle's vertices
  RealPolynomial char_poly;              // P of the gained graph via the correction
  RealPolynomial perm_poly;              // Q likewise
  double det_shift = 0.0;                // det A(gained) - det A(neutral)
  double per_shift = 0.0;                // per A(gained) - per A(neutral)
  bool perfect_matching_case = false;    // rest has a perfect matching (2k = n - cycle_length)
};

UnicyclicReport unicyclic_analysis(const GainGraph& g);
RealPolynomial unicyclic_char_poly(const GainGraph& g);
RealPolynomial unicyclic_perm_poly(const GainGraph& g);

// The star of m triangles: center 0, triangle l on {0, 2l+1, 2l+2} with the
// outer edge carrying the whole triangle gain. Both polynomial families have
// closed forms in m and alpha = 2 sum cos(theta_l).
GainGraph star_of_triangles(int m, const std::vector<UnitGain>& thetas);
double star_alpha(const std::vector<UnitGain>& thetas);

}  // namespace gaingraph
