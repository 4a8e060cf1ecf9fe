#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "gaingraph/coefficients.hpp"
#include "gaingraph/generate.hpp"

namespace gaingraph {

double uniform_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  auto range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(rng() % range);
}

UnitGain uniform_gain(std::mt19937_64& rng) { return UnitGain(1.0 - 2.0 * uniform_real(rng)); }

UnitGain fourth_root_gain(std::mt19937_64& rng) {
  static constexpr double kQuarters[4] = {0.0, 0.5, 1.0, -0.5};
  return UnitGain(kQuarters[uniform_int(rng, 0, 3)]);
}

GainGraph with_random_gains(const GainGraph& g, std::mt19937_64& rng) {
  std::vector<GainEdge> edges = g.edges();
  for (GainEdge& e : edges) e.gain = uniform_gain(rng);
  return GainGraph(g.vertex_count(), std::move(edges));
}

GainGraph with_fourth_root_gains(const GainGraph& g, std::mt19937_64& rng) {
  std::vector<GainEdge> edges = g.edges();
  for (GainEdge& e : edges) e.gain = fourth_root_gain(rng);
  return GainGraph(g.vertex_count(), std::move(edges));
}

GainGraph with_constant_gains(const GainGraph& g, UnitGain gain) {
  std::vector<GainEdge> edges = g.edges();
  for (GainEdge& e : edges) e.gain = gain;
  return GainGraph(g.vertex_count(), std::move(edges));
}

SwitchingFunction random_switching(int n, std::mt19937_64& rng) {
  SwitchingFunction zeta;
  zeta.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) zeta.push_back(uniform_gain(rng));
  return zeta;
}

GainGraph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_tree: need at least one vertex");
  std::vector<GainEdge> edges;
  if (n >= 2) {
    // Decode a random Pruefer sequence: join the smallest current leaf to
    // each code entry in turn, then the two survivors.
    std::vector<int> code(static_cast<size_t>(n - 2));
    for (int& s : code) s = uniform_int(rng, 0, n - 1);
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int s : code) ++degree[static_cast<size_t>(s)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    for (int s : code) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({leaf, s, UnitGain(0.0)});
      if (--degree[static_cast<size_t>(s)] == 1) leaves.insert(s);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.push_back({a, b, UnitGain(0.0)});
  }
  return GainGraph(n, std::move(edges));
}

GainGraph random_connected_gnp(int n, double p, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_connected_gnp: need at least one vertex");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_connected_gnp: p outside [0,1]");
  GainGraph tree = random_tree(n, rng);
  std::set<std::pair<int, int>> pairs;
  for (const GainEdge& e : tree.edges()) pairs.emplace(e.u, e.v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform_real(rng) < p) pairs.emplace(i, j);
  std::vector<GainEdge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, UnitGain(0.0)});
  return GainGraph(n, std::move(edges));
}

GainGraph random_unicyclic(int n, std::mt19937_64& rng) {
  if (n < 3) throw std::invalid_argument("random_unicyclic: need at least three vertices");
  GainGraph tree = random_tree(n, rng);
  std::vector<GainEdge> edges = tree.edges();
  for (;;) {
    int u = uniform_int(rng, 0, n - 1);
    int v = uniform_int(rng, 0, n - 1);
    if (u == v || tree.adjacent(u, v)) continue;
    edges.push_back({u, v, UnitGain(0.0)});
    break;
  }
  return GainGraph(n, std::move(edges));
}

GainGraph generate_graph(const GenerateOptions& opts) {
  std::mt19937_64 rng(opts.seed);

  if (opts.family == Family::kStarOfTriangles) {
    if (opts.n < 1)
      throw std::invalid_argument("generate_graph: star-of-triangles needs at least one triangle");
    std::vector<UnitGain> thetas;
    for (int l = 0; l < opts.n; ++l) {
      switch (opts.gain_mode) {
        case GainMode::kUniform: thetas.push_back(uniform_gain(rng)); break;
        case GainMode::kFourthRoots: thetas.push_back(fourth_root_gain(rng)); break;
        case GainMode::kConstant: thetas.push_back(UnitGain(opts.constant_theta_pi)); break;
      }
    }
    return star_of_triangles(opts.n, thetas);
  }

  GainGraph base(1, {});
  switch (opts.family) {
    case Family::kGnp: {
      if (opts.n < 1) throw std::invalid_argument("generate_graph: need at least one vertex");
      if (opts.edge_prob < 0.0 || opts.edge_prob > 1.0)
        throw std::invalid_argument("generate_graph: edge probability outside [0,1]");
      std::vector<GainEdge> edges;
      for (int i = 0; i < opts.n; ++i)
        for (int j = i + 1; j < opts.n; ++j)
          if (uniform_real(rng) < opts.edge_prob) edges.push_back({i, j, UnitGain(0.0)});
      base = GainGraph(opts.n, std::move(edges));
      break;
    }
    case Family::kTree:
      base = random_tree(opts.n, rng);
      break;
    case Family::kCycle: {
      if (opts.n < 3) throw std::invalid_argument("generate_graph: cycle needs three vertices");
      std::vector<GainEdge> edges;
      for (int i = 0; i < opts.n; ++i)
        edges.push_back({i, (i + 1) % opts.n, UnitGain(0.0)});
      base = GainGraph(opts.n, std::move(edges));
      break;
    }
    case Family::kComplete: {
      if (opts.n < 1) throw std::invalid_argument("generate_graph: need at least one vertex");
      std::vector<GainEdge> edges;
      for (int i = 0; i < opts.n; ++i)
        for (int j = i + 1; j < opts.n; ++j) edges.push_back({i, j, UnitGain(0.0)});
      base = GainGraph(opts.n, std::move(edges));
      break;
    }
    case Family::kCompleteBipartite: {
      if (opts.n < 1 || opts.q < 1)
        throw std::invalid_argument("generate_graph: both parts need a vertex");
      std::vector<GainEdge> edges;
      for (int i = 0; i < opts.n; ++i)
        for (int j = 0; j < opts.q; ++j) edges.push_back({i, opts.n + j, UnitGain(0.0)});
      base = GainGraph(opts.n + opts.q, std::move(edges));
      break;
    }
    case Family::kStarOfTriangles:
      break;  // handled above
  }

  switch (opts.gain_mode) {
    case GainMode::kUniform: return with_random_gains(base, rng);
    case GainMode::kFourthRoots: return with_fourth_root_gains(base, rng);
    case GainMode::kConstant: return with_constant_gains(base, UnitGain(opts.constant_theta_pi));
  }
  throw std::logic_error("generate_graph: unreachable");
}

}  // namespace gaingraph
