#pragma once

#include <complex>

#include "gaingraph/gain_graph.hpp"
#include "gaingraph/matrix.hpp"

namespace gaingraph {

// Size caps for the exponential kernels. Overridable per call; the CLI
// forwards --max-n where it applies.
inline constexpr int kPermanentCap = 12;
inline constexpr int kPermPolyCap = 10;
inline constexpr int kEnumerationCap = 14;

// Hermitian gain adjacency matrix: a_ij = phi(e_ij) for adjacent pairs, zero
// otherwise (zero diagonal).
ComplexMatrix adjacency_matrix(const GainGraph& g);

// All real eigenvalues of a Hermitian matrix, via the real-symmetric
// embedding [[Re, -Im], [Im, Re]] (each eigenvalue doubled) diagonalized by
// cyclic Jacobi sweeps. Rejects inputs that are not Hermitian within
// tolerance; throws if Jacobi fails to converge within 100 sweeps.
Spectrum eigenvalues(const ComplexMatrix& h);

// A(Phi)^k. Entry (i, j) is the sum of gains over all k-walks from i to j.
ComplexMatrix walk_gain_matrix(const GainGraph& g, int k);

// prod (x - lambda_i) expanded from the eigenvalues; coefficients real by
// construction.
RealPolynomial char_poly_numeric(const GainGraph& g);

// Permanent by Ryser's inclusion-exclusion with Gray-code row-sum updates,
// O(2^n n). Throws CapExceeded above the cap.
std::complex<double> permanent(const ComplexMatrix& m, int cap = kPermanentCap);

// Permanental polynomial per(xI - A(Phi)) via permanents of all principal
// submatrices: b_i = (-1)^i sum_{|S|=i} per(A[S]). Imaginary residues are
// checked (< 1e-9) and dropped.
RealPolynomial perm_poly_numeric(const GainGraph& g, int cap = kPermPolyCap);

}  // namespace gaingraph
