#include <algorithm>
#include <string>
#include <utility>

#include "gaingraph/elementary.hpp"
#include "gaingraph/errors.hpp"

namespace gaingraph {

namespace {

// Decision state for the vertex-by-vertex recursion. A vertex is `taken`
// once it sits in a chosen component; `done` once its fate is settled
// either way. The lowest not-done vertex drives every branch, which is what
// makes each subgraph reachable along exactly one path: components are
// always anchored at their minimum vertex.
struct Enumerator {
  const GainGraph& g;
  const std::function<void(const ElementarySubgraph&)>& visit;
  std::vector<char> taken;
  std::vector<char> done;
  ElementarySubgraph current;

  Enumerator(const GainGraph& graph, const std::function<void(const ElementarySubgraph&)>& v)
      : g(graph), visit(v), taken(graph.vertex_count(), 0), done(graph.vertex_count(), 0) {}

  void run(int from) {
    const int n = g.vertex_count();
    int v = from;
    while (v < n && done[v]) ++v;
    if (v == n) {
      if (current.component_count() > 0) visit(current);
      return;
    }

    // Branch 1: v is not in the subgraph.
    done[v] = 1;
    run(v + 1);
    done[v] = 0;

    // Branch 2: v is matched to a higher free neighbour.
    for (int u : g.neighbors(v)) {
      if (u < v || done[u]) continue;
      int e = g.edge_index(v, u);
      current.k2_edges.push_back(g.edges()[static_cast<size_t>(e)]);
      done[v] = done[u] = 1;
      taken[v] = taken[u] = 1;
      run(v + 1);
      taken[v] = taken[u] = 0;
      done[v] = done[u] = 0;
      current.k2_edges.pop_back();
    }

    // Branch 3: v anchors a cycle through higher free vertices.
    std::vector<int> path{v};
    grow_cycle(v, path);
  }

  void grow_cycle(int anchor, std::vector<int>& path) {
    int tail = path.back();
    for (int w : g.neighbors(tail)) {
      if (w == anchor && path.size() >= 3) {
        // Close only in the canonical direction.
        if (path[1] < path.back()) {
          for (int x : path) done[x] = taken[x] = 1;
          current.cycles.push_back(path);
          run(anchor + 1);
          current.cycles.pop_back();
          for (int x : path) done[x] = taken[x] = 0;
        }
        continue;
      }
      if (w <= anchor || done[w]) continue;
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      grow_cycle(anchor, path);
      path.pop_back();
    }
  }
};

long long matchings_recursive(const std::vector<std::pair<int, int>>& edges, size_t first, int k) {
  if (k == 0) return 1;
  if (first >= edges.size()) return 0;
  auto [u, v] = edges[first];
  long long total = matchings_recursive(edges, first + 1, k);
  std::vector<std::pair<int, int>> rest;
  rest.reserve(edges.size() - first - 1);
  for (size_t i = first + 1; i < edges.size(); ++i)
    if (edges[i].first != u && edges[i].first != v && edges[i].second != u &&
        edges[i].second != v)
      rest.push_back(edges[i]);
  total += matchings_recursive(rest, 0, k - 1);
  return total;
}

}  // namespace

void for_each_elementary_subgraph(const GainGraph& g,
                                  const std::function<void(const ElementarySubgraph&)>& visit,
                                  int max_n) {
  if (g.vertex_count() > max_n)
    throw CapExceeded(
        "for_each_elementary_subgraph: order " + std::to_string(g.vertex_count()) + " exceeds cap",
        max_n);
  Enumerator e(g, visit);
  e.run(0);
}

std::vector<ElementarySubgraph> elementary_subgraphs(const GainGraph& g, int size, int max_n) {
  std::vector<ElementarySubgraph> out;
  for_each_elementary_subgraph(
      g,
      [&](const ElementarySubgraph& h) {
        if (h.vertex_count() == size) out.push_back(h);
      },
      max_n);
  return out;
}

void for_each_cycle(const GainGraph& g, int length,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (length < 3 || length > g.vertex_count()) return;
  const int n = g.vertex_count();
  std::vector<char> in_path(n, 0);
  std::vector<int> path;

  // Same canonical rule as the subgraph enumeration, but paths are grown
  // directly instead of inside the component recursion.
  std::function<void(int)> grow = [&](int anchor) {
    int tail = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (g.adjacent(tail, anchor) && path[1] < path.back()) visit(path);
      return;
    }
    for (int w : g.neighbors(tail)) {
      if (w <= anchor || in_path[w]) continue;
      path.push_back(w);
      in_path[w] = 1;
      grow(anchor);
      in_path[w] = 0;
      path.pop_back();
    }
  };

  for (int v = 0; v + length <= n; ++v) {
    path.assign(1, v);
    in_path.assign(n, 0);
    in_path[v] = 1;
    grow(v);
  }
}

long long matching_count(const GainGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("matching_count: negative size");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const GainEdge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return matchings_recursive(edges, 0, k);
}

std::vector<long long> matching_table(const GainGraph& g) {
  std::vector<long long> m(static_cast<size_t>(g.vertex_count() / 2) + 1);
  for (size_t k = 0; k < m.size(); ++k) m[k] = matching_count(g, static_cast<int>(k));
  return m;
}

}  // namespace gaingraph
