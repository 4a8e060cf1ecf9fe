#pragma once

#include <optional>
#include <vector>

#include "gaingraph/unit_gain.hpp"

namespace gaingraph {

// One undirected edge with its gain, stored in the canonical orientation
// u < v. The reverse orientation carries the inverse gain.
struct GainEdge {
  int u = 0;
  int v = 0;
  UnitGain gain;
};

// Simple undirected finite graph with a unit complex gain per oriented edge.
// Immutable after construction; all operations on it are pure functions.
class GainGraph {
 public:
  // Validates and canonicalizes the edge list: indices in range, no
  // self-loops, no duplicate pairs; input edges with u > v are flipped and
  // their gain inverted. Throws std::invalid_argument naming the offending
  // edge otherwise.
  GainGraph(int vertex_count, std::vector<GainEdge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<GainEdge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

  // Gain of the oriented edge u -> v; inverse of gain(v, u). Empty for
  // non-adjacent pairs (distinct from a neutral gain).
  std::optional<UnitGain> gain(int u, int v) const;

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;  // sorted ascending

  // Index into edges() of the {u, v} edge, -1 if absent.
  int edge_index(int u, int v) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<GainEdge> edges_;
  std::vector<std::vector<int>> adj_;            // sorted neighbor lists
  std::vector<std::vector<int>> incident_edge_;  // parallel to adj_
};

// BFS spanning forest; the backbone for potentials, switching and
// fundamental cycles.
struct SpanningForest {
  std::vector<int> parent;       // -1 at component roots
  std::vector<int> parent_edge;  // edge index to parent, -1 at roots
  std::vector<int> component;    // component id per vertex
  std::vector<int> order;        // discovery order, roots first per component
  std::vector<int> tree_edges;
  std::vector<int> cotree_edges;
  int component_count = 0;
};

SpanningForest spanning_forest(const GainGraph& g);
bool is_connected(const GainGraph& g);

// The unique cycle closed by a co-tree edge: path u..root-side meeting point
// plus the edge itself. Returned as a vertex sequence without the closing
// repeat.
std::vector<int> fundamental_cycle(const GainGraph& g, const SpanningForest& f, int cotree_edge);

// Product of oriented edge gains along the closed sequence v1 v2 ... vl (the
// closing vl -> v1 step is implicit; a sequence that repeats v1 at the end is
// also accepted). Rejects anything that is not a simple cycle of length >= 3.
UnitGain cycle_gain(const GainGraph& g, const std::vector<int>& cycle);

// Every gain multiplied by -1; underlying graph unchanged.
GainGraph negated(const GainGraph& g);

// Same graph with all gains neutral, i.e. (G, 1).
GainGraph underlying(const GainGraph& g);

// Per-vertex unit values; used both as switching functions and as balance
// potentials.
using SwitchingFunction = std::vector<UnitGain>;

// Gains transformed edgewise: phi'(uv) = zeta(u)^{-1} phi(uv) zeta(v).
// Preserves the spectrum and all cycle gains.
GainGraph switched(const GainGraph& g, const SwitchingFunction& zeta);

// Balance decision with certificate. A potential psi with
// phi(uv) = psi(u)^{-1} psi(v) on every edge is returned when one exists
// (psi = 1 at each component root, propagated along the spanning forest and
// verified on all co-tree edges); empty means some cycle is not neutral.
std::optional<SwitchingFunction> balance_potential(const GainGraph& g, double tol = 1e-12);
bool is_balanced(const GainGraph& g, double tol = 1e-12);

// Decides switching equivalence of two gain assignments on the same
// underlying graph, returning a witness zeta such that
// switched(a, zeta) == b on success. Constructive converse of the
// cycle-gain necessary condition: per component, zeta(root) = 1 is
// propagated so tree-edge gains match, then every co-tree edge is checked.
// Throws if the underlying graphs differ.
std::optional<SwitchingFunction> switching_equivalent(const GainGraph& a, const GainGraph& b,
                                                      double tol = 1e-12);

struct Bipartition {
  std::vector<int> left, right;
};

// Two-coloring of the underlying graph; empty if an odd cycle exists.
std::optional<Bipartition> bipartition(const GainGraph& g);
bool is_bipartite(const GainGraph& g);

}  // namespace gaingraph
