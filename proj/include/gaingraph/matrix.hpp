#pragma once

#include <complex>
#include <string>
#include <vector>

namespace gaingraph {

// Dense complex matrix, row-major. Small orders only; everything downstream
// is desk-scale.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int order);
  static ComplexMatrix identity(int order);

  int order() const { return n_; }

  std::complex<double>& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const std::complex<double>& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  std::complex<double> trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  // max |a_ij - conj(a_ji)| over all pairs; zero for exactly Hermitian input.
  double hermitian_defect() const;

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  // Rows and columns restricted to `keep` (ascending order expected).
  ComplexMatrix principal_submatrix(const std::vector<int>& keep) const;

 private:
  int n_ = 0;
  std::vector<std::complex<double>> a_;
};

// Sorted (descending) real eigenvalue multiset of a Hermitian matrix.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  double lambda_max() const;
  double lambda_min() const;
  double spectral_radius() const;
  double sum() const;
  double sum_squares() const;

 private:
  std::vector<double> values_;  // descending
};

// |lambda_i - mu_i| <= tol * max(1, rho) for all i, after descending sort.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

// Multiset equals its own negation within tol.
bool spectrum_symmetric(const Spectrum& s, double tol);

// Monic real polynomial x^n + a_1 x^{n-1} + ... + a_n, stored as
// [1, a_1, ..., a_n].
class RealPolynomial {
 public:
  RealPolynomial() : coeffs_{1.0} {}  // the constant polynomial 1
  explicit RealPolynomial(std::vector<double> monic_coefficients);
  static RealPolynomial from_roots(const std::vector<double>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // a_i with a_0 = 1.
  double coefficient(int i) const;
  const std::vector<double>& coefficients() const { return coeffs_; }
  double evaluate(double x) const;

  // max_i |a_i - b_i|; degrees must match.
  double max_coefficient_difference(const RealPolynomial& other) const;

  std::string str() const;

 private:
  std::vector<double> coeffs_;
};

}  // namespace gaingraph
