#include "gaingraph/gain_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace gaingraph {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

GainGraph::GainGraph(int vertex_count, std::vector<GainEdge> edges) : n_(vertex_count) {
  if (n_ < 0) throw std::invalid_argument("GainGraph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("GainGraph: vertex index out of range in edge " +
                                  edge_str(e.u, e.v));
    if (e.u == e.v) throw std::invalid_argument("GainGraph: self-loop at vertex " +
                                                std::to_string(e.u));
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      e.gain = e.gain.inverse();
    }
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("GainGraph: duplicate edge " + edge_str(e.u, e.v));
  }
  std::sort(edges.begin(), edges.end(),
            [](const GainEdge& a, const GainEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  edges_ = std::move(edges);

  adj_.assign(n_, {});
  incident_edge_.assign(n_, {});
  for (int i = 0; i < edge_count(); ++i) {
    const auto& e = edges_[i];
    adj_[e.u].push_back(e.v);
    incident_edge_[e.u].push_back(i);
    adj_[e.v].push_back(e.u);
    incident_edge_[e.v].push_back(i);
  }
  for (int v = 0; v < n_; ++v) {
    std::vector<int> idx(adj_[v].size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
    std::vector<int> nb(idx.size()), ie(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
      nb[i] = adj_[v][idx[i]];
      ie[i] = incident_edge_[v][idx[i]];
    }
    adj_[v] = std::move(nb);
    incident_edge_[v] = std::move(ie);
  }
}

void GainGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("GainGraph: vertex " + std::to_string(v) + " out of range");
}

int GainGraph::edge_index(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return incident_edge_[u][it - nb.begin()];
}

std::optional<UnitGain> GainGraph::gain(int u, int v) const {
  int idx = edge_index(u, v);
  if (idx < 0) return std::nullopt;
  const auto& e = edges_[idx];
  return (u == e.u) ? e.gain : e.gain.inverse();
}

int GainGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& GainGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

SpanningForest spanning_forest(const GainGraph& g) {
  const int n = g.vertex_count();
  SpanningForest f;
  f.parent.assign(n, -1);
  f.parent_edge.assign(n, -1);
  f.component.assign(n, -1);
  f.order.reserve(n);
  std::vector<bool> tree_edge(g.edge_count(), false);

  for (int root = 0; root < n; ++root) {
    if (f.component[root] >= 0) continue;
    int cid = f.component_count++;
    std::deque<int> queue{root};
    f.component[root] = cid;
    f.order.push_back(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      const auto& nb = g.neighbors(u);
      for (size_t i = 0; i < nb.size(); ++i) {
        int v = nb[i];
        if (f.component[v] >= 0) continue;
        f.component[v] = cid;
        f.parent[v] = u;
        int eidx = g.edge_index(u, v);
        f.parent_edge[v] = eidx;
        tree_edge[eidx] = true;
        f.order.push_back(v);
        queue.push_back(v);
      }
    }
  }
  for (int i = 0; i < g.edge_count(); ++i)
    (tree_edge[i] ? f.tree_edges : f.cotree_edges).push_back(i);
  return f;
}

bool is_connected(const GainGraph& g) {
  if (g.vertex_count() <= 1) return true;
  return spanning_forest(g).component_count == 1;
}

std::vector<int> fundamental_cycle(const GainGraph& g, const SpanningForest& f, int cotree_edge) {
  if (cotree_edge < 0 || cotree_edge >= g.edge_count())
    throw std::invalid_argument("fundamental_cycle: edge index out of range");
  const auto& e = g.edges()[cotree_edge];

  auto path_to_root = [&](int v) {
    std::vector<int> path{v};
    while (f.parent[path.back()] >= 0) path.push_back(f.parent[path.back()]);
    return path;
  };
  std::vector<int> pu = path_to_root(e.u);
  std::vector<int> pv = path_to_root(e.v);
  // Drop the shared tail above the meeting point.
  while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
    pu.pop_back();
    pv.pop_back();
  }
  if (pu.back() != pv.back())
    throw std::invalid_argument("fundamental_cycle: edge endpoints in different components");

  // u ... meet ... v, then close with the co-tree edge v -> u.
  std::vector<int> cycle(pu.begin(), pu.end());
  for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
  return cycle;
}

UnitGain cycle_gain(const GainGraph& g, const std::vector<int>& cycle_in) {
  std::vector<int> cycle = cycle_in;
  if (cycle.size() >= 2 && cycle.front() == cycle.back()) cycle.pop_back();
  if (cycle.size() < 3) throw std::invalid_argument("cycle_gain: a cycle needs at least 3 vertices");
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size())
    throw std::invalid_argument("cycle_gain: repeated vertex in cycle");

  UnitGain product;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i];
    int v = cycle[(i + 1) % cycle.size()];
    auto gain = g.gain(u, v);
    if (!gain)
      throw std::invalid_argument("cycle_gain: vertices " + std::to_string(u) + " and " +
                                  std::to_string(v) + " are not adjacent");
    product = product * *gain;
  }
  return product;
}

GainGraph negated(const GainGraph& g) {
  std::vector<GainEdge> edges = g.edges();
  for (auto& e : edges) e.gain = e.gain.negated();
  return GainGraph(g.vertex_count(), std::move(edges));
}

GainGraph underlying(const GainGraph& g) {
  std::vector<GainEdge> edges = g.edges();
  for (auto& e : edges) e.gain = UnitGain{};
  return GainGraph(g.vertex_count(), std::move(edges));
}

GainGraph switched(const GainGraph& g, const SwitchingFunction& zeta) {
  if (static_cast<int>(zeta.size()) != g.vertex_count())
    throw std::invalid_argument("switched: switching function has wrong length");
  std::vector<GainEdge> edges = g.edges();
  for (auto& e : edges) e.gain = zeta[e.u].inverse() * e.gain * zeta[e.v];
  return GainGraph(g.vertex_count(), std::move(edges));
}

std::optional<SwitchingFunction> balance_potential(const GainGraph& g, double tol) {
  SpanningForest f = spanning_forest(g);
  SwitchingFunction psi(g.vertex_count());
  // phi(uv) = psi(u)^{-1} psi(v) along tree edges fixes psi from the roots.
  for (int v : f.order) {
    int p = f.parent[v];
    if (p < 0) continue;
    psi[v] = psi[p] * *g.gain(p, v);
  }
  for (int eidx : f.cotree_edges) {
    const auto& e = g.edges()[eidx];
    UnitGain required = psi[e.u].inverse() * psi[e.v];
    if (!e.gain.approx_equal(required, tol)) return std::nullopt;
  }
  return psi;
}

bool is_balanced(const GainGraph& g, double tol) { return balance_potential(g, tol).has_value(); }

std::optional<SwitchingFunction> switching_equivalent(const GainGraph& a, const GainGraph& b,
                                                      double tol) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    throw std::invalid_argument("switching_equivalent: underlying graphs differ");
  for (int i = 0; i < a.edge_count(); ++i) {
    if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v)
      throw std::invalid_argument("switching_equivalent: underlying graphs differ");
  }

  SpanningForest f = spanning_forest(a);
  SwitchingFunction zeta(a.vertex_count());
  // Want phi_b(uv) = zeta(u)^{-1} phi_a(uv) zeta(v); along tree edges this
  // determines zeta from the roots.
  for (int v : f.order) {
    int p = f.parent[v];
    if (p < 0) continue;
    zeta[v] = zeta[p] * a.gain(p, v)->inverse() * *b.gain(p, v);
  }
  for (int eidx : f.cotree_edges) {
    const auto& e = a.edges()[eidx];
    UnitGain transformed = zeta[e.u].inverse() * e.gain * zeta[e.v];
    if (!transformed.approx_equal(b.edges()[eidx].gain, tol)) return std::nullopt;
  }
  return zeta;
}

std::optional<Bipartition> bipartition(const GainGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

bool is_bipartite(const GainGraph& g) { return bipartition(g).has_value(); }

}  // namespace gaingraph
