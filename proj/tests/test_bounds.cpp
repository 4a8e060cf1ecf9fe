#include <cmath>
#include <random>

#include "doctest.h"
#include "gaingraph/bounds.hpp"
#include "gaingraph/generate.hpp"
#include "gaingraph/linalg.hpp"
#include "oracles.hpp"

using namespace gaingraph;

TEST_CASE("edge count bounds") {
  ExtremeBounds b = edge_count_bounds(2, 1);
  CHECK(b.lambda_1.lo == doctest::Approx(1.0));
  CHECK(b.lambda_1.hi == doctest::Approx(1.0));
  CHECK(b.lambda_n.lo == doctest::Approx(-1.0));
  CHECK(b.lambda_n.hi == doctest::Approx(-1.0));

  // K_n with all gains 1 attains the upper end; all gains -1 the lower.
  for (int n = 3; n <= 6; ++n) {
    int m = n * (n - 1) / 2;
    ExtremeBounds kb = edge_count_bounds(n, m);
    CHECK(kb.lambda_1.hi == doctest::Approx(n - 1.0).epsilon(1e-12));
    CHECK(kb.lambda_n.lo == doctest::Approx(-(n - 1.0)).epsilon(1e-12));

    GainGraph plus = generate_graph({Family::kComplete, n, 0, 0.5, GainMode::kConstant, 0.0, 1});
    CHECK(eigenvalues(adjacency_matrix(plus)).lambda_max() ==
          doctest::Approx(n - 1.0).epsilon(1e-10));
    GainGraph minus = generate_graph({Family::kComplete, n, 0, 0.5, GainMode::kConstant, 1.0, 1});
    CHECK(eigenvalues(adjacency_matrix(minus)).lambda_min() ==
          doctest::Approx(-(n - 1.0)).epsilon(1e-10));
  }

  CHECK_THROWS_AS(edge_count_bounds(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(edge_count_bounds(3, 4), std::invalid_argument);
}

TEST_CASE("mean-spread bounds enclose the extreme eigenvalues") {
  CHECK(wolkowicz_bounds(ComplexMatrix(3)).lambda_1.hi == 0.0);

  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    ComplexMatrix h = oracle::random_hermitian(rng, n);
    ExtremeBounds b = wolkowicz_bounds(h);
    Spectrum s = eigenvalues(h);
    CHECK(b.lambda_1.contains(s.lambda_max(), 1e-9));
    CHECK(b.lambda_n.contains(s.lambda_min(), 1e-9));
  }

  CHECK_THROWS_AS(wolkowicz_bounds(ComplexMatrix(1)), std::invalid_argument);
}

TEST_CASE("for gain graphs the two interval formulas coincide") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    GainGraph g = oracle::random_gnp_gains(rng, n, 0.5);
    ExtremeBounds ec = edge_count_bounds(n, g.edge_count());
    ExtremeBounds wb = wolkowicz_bounds(adjacency_matrix(g));
    CHECK(ec.lambda_1.lo == doctest::Approx(wb.lambda_1.lo).epsilon(1e-12).scale(1.0));
    CHECK(ec.lambda_1.hi == doctest::Approx(wb.lambda_1.hi).epsilon(1e-12).scale(1.0));
    CHECK(ec.lambda_n.lo == doctest::Approx(wb.lambda_n.lo).epsilon(1e-12).scale(1.0));
    CHECK(ec.lambda_n.hi == doctest::Approx(wb.lambda_n.hi).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("triangle bound") {
  GainGraph k3(3, {{0, 1, UnitGain(0.0)}, {0, 2, UnitGain(0.0)}, {1, 2, UnitGain(0.0)}});
  CHECK(triangle_bound(k3) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));

  GainGraph rem1(3, {{0, 1, UnitGain(0.5)}, {0, 2, UnitGain(0.5)}, {1, 2, UnitGain(0.5)}});
  CHECK(triangle_bound(rem1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

  GainGraph c4(4, {{0, 1, UnitGain(0.0)}, {1, 2, UnitGain(0.0)}, {2, 3, UnitGain(0.0)},
                   {0, 3, UnitGain(0.0)}});
  CHECK(triangle_bound(c4) == 0.0);

  // Negative sums are allowed and stay below lambda_1.
  GainGraph neg(3, {{0, 1, UnitGain(1.0)}, {0, 2, UnitGain(0.0)}, {1, 2, UnitGain(0.0)}});
  CHECK(triangle_bound(neg) < 0.0);
  CHECK(triangle_bound(neg) <= eigenvalues(adjacency_matrix(neg)).lambda_max() + 1e-12);
}

TEST_CASE("degree pair bound") {
  GainGraph p3(3, {{0, 1, UnitGain(0.0)}, {1, 2, UnitGain(0.0)}});
  CHECK(degree_pair_bound(p3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  GainGraph k2(2, {{0, 1, UnitGain(0.25)}});
  CHECK(degree_pair_bound(k2) == doctest::Approx(1.0).epsilon(1e-12));

  GainGraph edgeless(3, {});
  CHECK(degree_pair_bound(edgeless) == 0.0);
  CHECK_THROWS_AS(degree_pair_bound(GainGraph(1, {})), std::invalid_argument);
}

TEST_CASE("full report on random instances") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    GainGraph g = oracle::random_gnp_gains(rng, n, 0.5);
    BoundsReport r = bounds_report(g);
    CHECK(r.all_satisfied);
    CHECK(r.lambda_1 >= r.lambda_n);
    CHECK(r.sigma == doctest::Approx(std::max(std::fabs(r.lambda_1), std::fabs(r.lambda_n))));
  }
}
