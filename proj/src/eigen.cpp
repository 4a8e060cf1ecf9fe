#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gaingraph/linalg.hpp"

namespace gaingraph {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& s, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) acc += s[static_cast<size_t>(i) * n + j] * s[static_cast<size_t>(i) * n + j];
  return std::sqrt(acc);
}

// Cyclic Jacobi on a dense symmetric matrix, in place. Returns the diagonal.
std::vector<double> jacobi_symmetric(std::vector<double>& s, int n, double off_threshold) {
  auto at = [&](int i, int j) -> double& { return s[static_cast<size_t>(i) * n + j]; };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(s, n) < off_threshold) {
      std::vector<double> diag(n);
      for (int i = 0; i < n; ++i) diag[i] = at(i, i);
      return diag;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double sn = t * c;

        double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - sn * akq;
          at(p, k) = at(k, p);
          at(k, q) = sn * akp + c * akq;
          at(q, k) = at(k, q);
        }
      }
    }
  }
  if (off_diagonal_norm(s, n) < off_threshold) {
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = at(i, i);
    return diag;
  }
  throw std::runtime_error("eigenvalues: Jacobi did not converge in 100 sweeps");
}

}  // namespace

Spectrum eigenvalues(const ComplexMatrix& h) {
  const int n = h.order();
  double scale = std::max(1.0, h.max_abs());
  if (h.hermitian_defect() > 1e-10 * scale)
    throw std::invalid_argument("eigenvalues: matrix is not Hermitian within tolerance");
  if (n == 0) return Spectrum({});

  double hnorm = h.frobenius_norm();
  if (hnorm == 0.0) return Spectrum(std::vector<double>(n, 0.0));

  // Real-symmetric embedding: H = Re + i*Im maps to [[Re, -Im], [Im, Re]].
  // Every eigenvalue of H shows up exactly twice.
  const int m = 2 * n;
  std::vector<double> s(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double re = h(i, j).real();
      double im = h(i, j).imag();
      s[static_cast<size_t>(i) * m + j] = re;
      s[static_cast<size_t>(i) * m + (j + n)] = -im;
      s[static_cast<size_t>(i + n) * m + j] = im;
      s[static_cast<size_t>(i + n) * m + (j + n)] = re;
    }
  }

  std::vector<double> diag = jacobi_symmetric(s, m, 1e-12 * hnorm);
  std::sort(diag.begin(), diag.end(), std::greater<>());

  // Deduplicate the doubled spectrum by taking every second entry.
  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = diag[static_cast<size_t>(2 * i)];
  return Spectrum(std::move(eigs));
}

}  // namespace gaingraph
