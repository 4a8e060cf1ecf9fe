#pragma once

#include <functional>
#include <vector>

#include "gaingraph/gain_graph.hpp"
#include "gaingraph/linalg.hpp"

namespace gaingraph {

// A subgraph whose components are single edges and vertex-disjoint cycles.
// Cycles are stored anchored at their smallest vertex with the traversal
// direction fixed by second < last, so every subgraph has one representation.
struct ElementarySubgraph {
  std::vector<GainEdge> k2_edges;
  std::vector<std::vector<int>> cycles;

  int vertex_count() const {
    int n = 2 * static_cast<int>(k2_edges.size());
    for (const auto& c : cycles) n += static_cast<int>(c.size());
    return n;
  }
  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int component_count() const {
    return static_cast<int>(k2_edges.size()) + static_cast<int>(cycles.size());
  }
};

// Visits every nonempty elementary subgraph of g exactly once, in the order
// produced by recursing on the lowest-index undecided vertex (skip it, pair
// it with a higher neighbour, or anchor a cycle at it).
void for_each_elementary_subgraph(const GainGraph& g,
                                  const std::function<void(const ElementarySubgraph&)>& visit,
                                  int max_n = kEnumerationCap);

// All elementary subgraphs on exactly `size` vertices.
std::vector<ElementarySubgraph> elementary_subgraphs(const GainGraph& g, int size,
                                                     int max_n = kEnumerationCap);

// Visits each simple cycle of the given length once, as a canonical vertex
// sequence (no closing repeat).
void for_each_cycle(const GainGraph& g, int length,
                    const std::function<void(const std::vector<int>&)>& visit);

// Number of k-edge matchings, by branching on an edge: either it is unused,
// or it is used and both endpoints drop out.
long long matching_count(const GainGraph& g, int k);

// m[k] for k = 0 .. floor(n/2); m[0] = 1.
std::vector<long long> matching_table(const GainGraph& g);

}  // namespace gaingraph
