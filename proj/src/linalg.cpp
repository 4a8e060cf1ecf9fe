#include <complex>
#include <stdexcept>

#include "gaingraph/linalg.hpp"

namespace gaingraph {

ComplexMatrix adjacency_matrix(const GainGraph& g) {
  ComplexMatrix a(g.vertex_count());
  for (const GainEdge& e : g.edges()) {
    a(e.u, e.v) = e.gain.value();
    a(e.v, e.u) = std::conj(e.gain.value());
  }
  return a;
}

ComplexMatrix walk_gain_matrix(const GainGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("walk_gain_matrix: negative walk length");
  const int n = g.vertex_count();
  if (k == 0) return ComplexMatrix::identity(n);
  ComplexMatrix a = adjacency_matrix(g);
  ComplexMatrix p = a;
  for (int step = 1; step < k; ++step) p = p * a;
  return p;
}

RealPolynomial char_poly_numeric(const GainGraph& g) {
  Spectrum spec = eigenvalues(adjacency_matrix(g));
  return RealPolynomial::from_roots(spec.values());
}

}  // namespace gaingraph
