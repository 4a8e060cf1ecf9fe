#pragma once

// Brute-force reference implementations the library is checked against.
// Deliberately written with different algorithms than the library: naive
// permutation sums, exhaustive subset scans, LU factorization.

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "gaingraph/gain_graph.hpp"
#include "gaingraph/generate.hpp"
#include "gaingraph/linalg.hpp"
#include "gaingraph/matrix.hpp"

namespace oracle {

using gaingraph::ComplexMatrix;
using gaingraph::GainGraph;

// Permanent as a literal sum over all permutations.
inline std::complex<double> naive_permanent(const ComplexMatrix& a) {
  const int n = a.order();
  if (n > 9) throw std::invalid_argument("naive_permanent: too large");
  if (n == 0) return {1.0, 0.0};
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> total(0.0, 0.0);
  do {
    std::complex<double> prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= a(i, perm[static_cast<size_t>(i)]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Determinant by LU with partial pivoting; independent of both the
// eigensolver and the combinatorial expansion.
inline std::complex<double> lu_determinant(ComplexMatrix a) {
  const int n = a.order();
  std::complex<double> det(1.0, 0.0);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(a(row, col)) > std::abs(a(pivot, col))) pivot = row;
    if (std::abs(a(pivot, col)) == 0.0) return {0.0, 0.0};
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int row = col + 1; row < n; ++row) {
      std::complex<double> f = a(row, col) / a(col, col);
      for (int j = col; j < n; ++j) a(row, j) -= f * a(col, j);
    }
  }
  return det;
}

// Entrywise sum over all k-step walks of the product of step gains.
inline ComplexMatrix walk_gains(const GainGraph& g, int k) {
  const int n = g.vertex_count();
  ComplexMatrix w(n);
  std::vector<std::vector<std::complex<double>>> cur(
      static_cast<size_t>(n), std::vector<std::complex<double>>(static_cast<size_t>(n)));
  // cur[i][j] after s steps = sum over i->j walks of length s.
  for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<std::complex<double>>> next(
        static_cast<size_t>(n), std::vector<std::complex<double>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (cur[static_cast<size_t>(i)][static_cast<size_t>(j)] == std::complex<double>(0.0, 0.0))
          continue;
        for (int t : g.neighbors(j))
          next[static_cast<size_t>(i)][static_cast<size_t>(t)] +=
              cur[static_cast<size_t>(i)][static_cast<size_t>(j)] * g.gain(j, t)->value();
      }
    cur = std::move(next);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = cur[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return w;
}

// Number of k-edge matchings by scanning all k-subsets of the edge list.
inline long long count_matchings(const GainGraph& g, int k) {
  const int m = g.edge_count();
  if (k == 0) return 1;
  if (k > m) return 0;
  std::vector<int> pick(static_cast<size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  long long count = 0;
  for (;;) {
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    bool disjoint = true;
    for (int idx : pick) {
      const auto& e = g.edges()[static_cast<size_t>(idx)];
      if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)]) {
        disjoint = false;
        break;
      }
      used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 1;
    }
    if (disjoint) ++count;
    // next k-combination of {0..m-1}
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return count;
}

// All simple cycles of the given length, found by checking every vertex
// subset for Hamiltonian cycles via permutations anchored at the subset
// minimum; direction deduplicated.
inline std::vector<std::vector<int>> all_cycles(const GainGraph& g, int length) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  if (length < 3 || length > n) return out;
  std::vector<int> pick(static_cast<size_t>(length));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<int> rest(pick.begin() + 1, pick.end());
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;  // one direction only
      std::vector<int> cycle{pick[0]};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      bool ok = true;
      for (int i = 0; i < length && ok; ++i)
        if (!g.adjacent(cycle[static_cast<size_t>(i)],
                        cycle[static_cast<size_t>((i + 1) % length)]))
          ok = false;
      if (ok) out.push_back(cycle);
    } while (std::next_permutation(rest.begin(), rest.end()));
    int i = length - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - length + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < length; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

// Number of i-vertex spanning structures whose components are all single
// edges or cycles, counted by scanning every edge subset.
inline long long count_elementary_edge_subsets(const GainGraph& g, int target_vertices) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > 20) throw std::invalid_argument("count_elementary_edge_subsets: too many edges");
  long long count = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<int> degree(static_cast<size_t>(n), 0);
    std::vector<int> touched;
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1u)) continue;
      const auto& edge = g.edges()[static_cast<size_t>(e)];
      if (++degree[static_cast<size_t>(edge.u)] > 2) ok = false;
      if (++degree[static_cast<size_t>(edge.v)] > 2) ok = false;
      touched.push_back(edge.u);
      touched.push_back(edge.v);
    }
    if (!ok) continue;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    if (static_cast<int>(touched.size()) != target_vertices) continue;

    // Components must be single edges or cycles: walk each one.
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int e = 0; e < m; ++e) {
      if (!((mask >> e) & 1u)) continue;
      const auto& edge = g.edges()[static_cast<size_t>(e)];
      adj[static_cast<size_t>(edge.u)].push_back(edge.v);
      adj[static_cast<size_t>(edge.v)].push_back(edge.u);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int start : touched) {
      if (seen[static_cast<size_t>(start)] || !ok) continue;
      std::vector<int> stack{start};
      std::vector<int> comp;
      seen[static_cast<size_t>(start)] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int u : adj[static_cast<size_t>(v)])
          if (!seen[static_cast<size_t>(u)]) {
            seen[static_cast<size_t>(u)] = 1;
            stack.push_back(u);
          }
      }
      int comp_edges = 0;
      for (int v : comp) comp_edges += static_cast<int>(adj[static_cast<size_t>(v)].size());
      comp_edges /= 2;
      bool is_k2 = comp.size() == 2 && comp_edges == 1;
      bool is_cycle = comp.size() >= 3 && comp_edges == static_cast<int>(comp.size());
      if (!is_k2 && !is_cycle) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// Random test instances.
inline ComplexMatrix random_complex_matrix(std::mt19937_64& rng, int n) {
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = {2.0 * gaingraph::uniform_real(rng) - 1.0,
                 2.0 * gaingraph::uniform_real(rng) - 1.0};
  return a;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = {2.0 * gaingraph::uniform_real(rng) - 1.0, 0.0};
    for (int j = i + 1; j < n; ++j) {
      std::complex<double> z{2.0 * gaingraph::uniform_real(rng) - 1.0,
                             2.0 * gaingraph::uniform_real(rng) - 1.0};
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return a;
}

inline GainGraph random_gnp_gains(std::mt19937_64& rng, int n, double p) {
  std::vector<gaingraph::GainEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gaingraph::uniform_real(rng) < p) edges.push_back({i, j, gaingraph::uniform_gain(rng)});
  return GainGraph(n, std::move(edges));
}

}  // namespace oracle
