#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gaingraph/errors.hpp"
#include "gaingraph/linalg.hpp"
#include "oracles.hpp"

using namespace gaingraph;

namespace {

GainGraph rem1_triangle() {
  return GainGraph(3, {{0, 1, UnitGain(0.5)}, {0, 2, UnitGain(0.5)}, {1, 2, UnitGain(0.5)}});
}

}  // namespace

TEST_CASE("adjacency matrix is Hermitian with unit entries") {
  GainGraph g = rem1_triangle();
  ComplexMatrix a = adjacency_matrix(g);
  CHECK(a(0, 1) == std::complex<double>(0.0, 1.0));
  CHECK(a(1, 0) == std::complex<double>(0.0, -1.0));
  CHECK(a(2, 2) == std::complex<double>(0.0, 0.0));
  CHECK(a.hermitian_defect() == 0.0);
}

TEST_CASE("eigenvalues of small known spectra") {
  // i-gain triangle: {sqrt3, 0, -sqrt3}
  Spectrum s = eigenvalues(adjacency_matrix(rem1_triangle()));
  CHECK(s.values()[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(s.values()[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(s.values()[2] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));

  // neutral K3: {2, -1, -1}
  GainGraph k3(3, {{0, 1, UnitGain(0.0)}, {0, 2, UnitGain(0.0)}, {1, 2, UnitGain(0.0)}});
  Spectrum t = eigenvalues(adjacency_matrix(k3));
  CHECK(t.values()[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(t.values()[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(t.values()[2] == doctest::Approx(-1.0).epsilon(1e-12));

  // path P3: {sqrt2, 0, -sqrt2}
  GainGraph p3(3, {{0, 1, UnitGain(0.3)}, {1, 2, UnitGain(-0.7)}});
  Spectrum u = eigenvalues(adjacency_matrix(p3));
  CHECK(u.values()[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK(eigenvalues(ComplexMatrix(4)).values() == std::vector<double>{0, 0, 0, 0});
  CHECK(eigenvalues(ComplexMatrix(0)).size() == 0);
}

TEST_CASE("eigenvalues rejects non-Hermitian input") {
  ComplexMatrix a(2);
  a(0, 1) = {1.0, 0.0};
  a(1, 0) = {0.5, 0.0};
  CHECK_THROWS_AS(eigenvalues(a), std::invalid_argument);
}

TEST_CASE("eigenvalues against trace and determinant identities") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    ComplexMatrix h = oracle::random_hermitian(rng, n);
    Spectrum s = eigenvalues(h);

    double trace_sq = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) trace_sq += std::norm(h(i, j));
    CHECK(s.sum() == doctest::Approx(h.trace().real()).epsilon(1e-9).scale(n));
    CHECK(s.sum_squares() == doctest::Approx(trace_sq).epsilon(1e-9).scale(n));

    double det = 1.0;
    for (double v : s.values()) det *= v;
    std::complex<double> ref = oracle::lu_determinant(h);
    CHECK(std::fabs(ref.imag()) < 1e-9);
    CHECK(det == doctest::Approx(ref.real()).epsilon(1e-8).scale(1.0 + std::fabs(ref.real())));
  }
}

TEST_CASE("embedded double eigenvalues pair up") {
  // The solver works on the 2n x 2n real embedding whose spectrum doubles
  // every eigenvalue; the dedup step relies on near-exact pairing.
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    ComplexMatrix h = oracle::random_hermitian(rng, n);
    ComplexMatrix embed(2 * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        embed(i, j) = h(i, j).real();
        embed(i, j + n) = -h(i, j).imag();
        embed(i + n, j) = h(i, j).imag();
        embed(i + n, j + n) = h(i, j).real();
      }
    Spectrum s = eigenvalues(embed);
    for (int i = 0; i < n; ++i)
      CHECK(std::fabs(s.values()[2 * i] - s.values()[2 * i + 1]) < 1e-10);
  }
}

TEST_CASE("walk gain matrix equals the step-by-step enumeration") {
  std::mt19937_64 rng(47);
  CHECK(walk_gain_matrix(rem1_triangle(), 0).hermitian_defect() == 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7
    GainGraph g = oracle::random_gnp_gains(rng, n, 0.5);
    for (int k = 0; k <= 5; ++k) {
      ComplexMatrix got = walk_gain_matrix(g, k);
      ComplexMatrix want = oracle::walk_gains(g, k);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(std::abs(got(i, j) - want(i, j)) < 1e-10);
    }
  }
  CHECK_THROWS_AS(walk_gain_matrix(rem1_triangle(), -1), std::invalid_argument);
}

TEST_CASE("characteristic polynomial from the spectrum") {
  RealPolynomial p = char_poly_numeric(rem1_triangle());
  CHECK(p.coefficient(1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
  CHECK(p.coefficient(2) == doctest::Approx(-3.0).epsilon(1e-10));
  CHECK(p.coefficient(3) == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));

  GainGraph edgeless(5, {});
  RealPolynomial q = char_poly_numeric(edgeless);
  for (int i = 1; i <= 5; ++i) CHECK(q.coefficient(i) == 0.0);
}

TEST_CASE("trace identities across random gain graphs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    GainGraph g = oracle::random_gnp_gains(rng, n, 0.5);
    Spectrum s = eigenvalues(adjacency_matrix(g));
    CHECK(std::fabs(s.sum()) < 1e-9);
    CHECK(s.sum_squares() == doctest::Approx(2.0 * g.edge_count()).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("interlacing for random principal submatrices") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    GainGraph g = oracle::random_gnp_gains(rng, n, 0.6);
    ComplexMatrix a = adjacency_matrix(g);
    int r = 1 + static_cast<int>(rng() % (n - 1));
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int v = n - 1; v > 0; --v)
      std::swap(order[static_cast<size_t>(v)], order[rng() % (static_cast<size_t>(v) + 1)]);
    std::vector<int> keep(order.begin(), order.begin() + r);
    std::sort(keep.begin(), keep.end());
    Spectrum full = eigenvalues(a);
    Spectrum sub = eigenvalues(a.principal_submatrix(keep));
    for (int k = 1; k <= r; ++k) {
      CHECK(sub.values()[k - 1] <= full.values()[k - 1] + 1e-9);
      CHECK(full.values()[n + k - r - 1] <= sub.values()[k - 1] + 1e-9);
    }
  }
}

TEST_CASE("permanent reference values") {
  CHECK(permanent(ComplexMatrix::identity(5)) == std::complex<double>(1.0, 0.0));
  CHECK(permanent(ComplexMatrix(0)) == std::complex<double>(1.0, 0.0));

  GainGraph k2(2, {{0, 1, UnitGain(0.37)}});
  std::complex<double> p2 = permanent(adjacency_matrix(k2));
  CHECK(p2.real() == doctest::Approx(1.0).epsilon(1e-12));  // g * conj(g)
  CHECK(p2.imag() == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

  std::complex<double> p3 = permanent(adjacency_matrix(rem1_triangle()));
  CHECK(std::abs(p3) < 1e-12);  // 2 Re(i) = 0

  CHECK_THROWS_AS(permanent(ComplexMatrix(13)), CapExceeded);
}

TEST_CASE("Ryser against the permutation sum") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    ComplexMatrix a = oracle::random_complex_matrix(rng, n);
    std::complex<double> fast = permanent(a);
    std::complex<double> slow = oracle::naive_permanent(a);
    CHECK(std::abs(fast - slow) < 1e-9 * std::max(1.0, std::abs(slow)));
  }
}

TEST_CASE("permanental polynomial basics") {
  GainGraph k2(2, {{0, 1, UnitGain(0.37)}});
  RealPolynomial q = perm_poly_numeric(k2);
  CHECK(q.coefficient(1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(q.coefficient(2) == doctest::Approx(1.0).epsilon(1e-12));

  GainGraph edgeless(4, {});
  RealPolynomial e = perm_poly_numeric(edgeless);
  for (int i = 1; i <= 4; ++i) CHECK(e.coefficient(i) == 0.0);

  CHECK_THROWS_AS(perm_poly_numeric(GainGraph(11, {})), CapExceeded);
}
