#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gaingraph/errors.hpp"
#include "gaingraph/linalg.hpp"

namespace gaingraph {

// Ryser's inclusion-exclusion, walking subsets in Gray-code order so each
// step updates the n row sums with a single column instead of rebuilding them.
std::complex<double> permanent(const ComplexMatrix& a, int cap) {
  const int n = a.order();
  if (n > cap) throw CapExceeded("permanent: order " + std::to_string(n) + " exceeds cap", cap);
  if (n == 0) return {1.0, 0.0};

  std::vector<std::complex<double>> row_sum(n, std::complex<double>(0.0, 0.0));
  std::complex<double> total(0.0, 0.0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  int bits = 0;
  for (std::uint64_t k = 1; k < limit; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t gray = k ^ (k >> 1);
    if ((gray >> col) & 1u) {
      for (int i = 0; i < n; ++i) row_sum[i] += a(i, col);
      ++bits;
    } else {
      for (int i = 0; i < n; ++i) row_sum[i] -= a(i, col);
      --bits;
    }
    std::complex<double> prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= row_sum[i];
    total += (bits % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

RealPolynomial perm_poly_numeric(const GainGraph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapExceeded("perm_poly_numeric: order " + std::to_string(n) + " exceeds cap", cap);
  ComplexMatrix a = adjacency_matrix(g);

  // per(xI − A) = Σ_k x^{n−k} (−1)^k Σ_{|S|=k} per(A[S]).
  std::vector<std::complex<double>> by_size(static_cast<size_t>(n) + 1,
                                            std::complex<double>(0.0, 0.0));
  by_size[0] = {1.0, 0.0};
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    by_size[idx.size()] += permanent(a.principal_submatrix(idx));
  }

  std::vector<double> coeffs(static_cast<size_t>(n) + 1);
  coeffs[0] = 1.0;
  double sign = 1.0;
  for (int k = 1; k <= n; ++k) {
    sign = -sign;
    std::complex<double> b = sign * by_size[static_cast<size_t>(k)];
    if (std::fabs(b.imag()) > 1e-9)
      throw std::runtime_error("perm_poly_numeric: non-real coefficient residue");
    coeffs[static_cast<size_t>(k)] = b.real();
  }
  return RealPolynomial(std::move(coeffs));
}

}  // namespace gaingraph
