#include "gaingraph/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gaingraph {

ComplexMatrix::ComplexMatrix(int order) : n_(order) {
  if (order < 0) throw std::invalid_argument("ComplexMatrix: negative order");
  a_.assign(static_cast<size_t>(n_) * n_, {0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int order) {
  ComplexMatrix m(order);
  for (int i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

std::complex<double> ComplexMatrix::trace() const {
  std::complex<double> t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermitian_defect() const {
  double d = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("ComplexMatrix: order mismatch in product");
  ComplexMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      std::complex<double> aik = (*this)(i, k);
      if (aik == std::complex<double>{}) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

ComplexMatrix ComplexMatrix::principal_submatrix(const std::vector<int>& keep) const {
  ComplexMatrix out(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_)
      throw std::invalid_argument("principal_submatrix: index out of range");
    for (size_t j = 0; j < keep.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = (*this)(keep[i], keep[j]);
  }
  return out;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::lambda_max() const {
  if (values_.empty()) throw std::invalid_argument("Spectrum: empty");
  return values_.front();
}

double Spectrum::lambda_min() const {
  if (values_.empty()) throw std::invalid_argument("Spectrum: empty");
  return values_.back();
}

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (double v : values_) r = std::max(r, std::fabs(v));
  return r;
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

double Spectrum::sum_squares() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return s;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.size() != b.size()) throw std::invalid_argument("spectra_equal: size mismatch");
  double scale = std::max(1.0, std::max(a.spectral_radius(), b.spectral_radius()));
  for (int i = 0; i < a.size(); ++i)
    if (std::fabs(a.values()[i] - b.values()[i]) > tol * scale) return false;
  return true;
}

bool spectrum_symmetric(const Spectrum& s, double tol) {
  std::vector<double> neg;
  neg.reserve(s.values().size());
  for (auto it = s.values().rbegin(); it != s.values().rend(); ++it) neg.push_back(-*it);
  return spectra_equal(s, Spectrum(std::move(neg)), tol);
}

RealPolynomial::RealPolynomial(std::vector<double> monic_coefficients)
    : coeffs_(std::move(monic_coefficients)) {
  if (coeffs_.empty() || coeffs_.front() != 1.0)
    throw std::invalid_argument("RealPolynomial: leading coefficient must be exactly 1");
}

RealPolynomial RealPolynomial::from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * r;
    }
    c = std::move(next);
  }
  return RealPolynomial(std::move(c));
}

double RealPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) throw std::invalid_argument("RealPolynomial: coefficient index");
  return coeffs_[static_cast<size_t>(i)];
}

double RealPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * x + c;
  return acc;
}

double RealPolynomial::max_coefficient_difference(const RealPolynomial& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("RealPolynomial: degree mismatch in comparison");
  double d = 0.0;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    d = std::max(d, std::fabs(coeffs_[i] - other.coeffs_[i]));
  return d;
}

std::string RealPolynomial::str() const {
  std::string out;
  char buf[64];
  for (int i = 0; i <= degree(); ++i) {
    double c = coeffs_[static_cast<size_t>(i)];
    if (c == 0.0 && i != 0) continue;
    int power = degree() - i;
    if (!out.empty()) out += (c < 0 ? " - " : " + ");
    else if (c < 0) out += "-";
    double mag = std::fabs(c);
    bool unit = (mag == 1.0) && power > 0;
    if (!unit) {
      std::snprintf(buf, sizeof(buf), "%.12g", mag);
      out += buf;
    }
    if (power > 0) {
      out += "x";
      if (power > 1) {
        std::snprintf(buf, sizeof(buf), "^%d", power);
        out += buf;
      }
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace gaingraph
