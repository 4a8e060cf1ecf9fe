#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gaingraph/gain_graph.hpp"

namespace gaingraph {

// Draws routed through these helpers only; std::mt19937_64 produces a fixed
// stream everywhere, while the standard distributions do not, and generated
// instances must be bit-reproducible across platforms.
double uniform_real(std::mt19937_64& rng);                 // [0, 1)
int uniform_int(std::mt19937_64& rng, int lo, int hi);     // inclusive
UnitGain uniform_gain(std::mt19937_64& rng);               // angle uniform in (-1, 1]
UnitGain fourth_root_gain(std::mt19937_64& rng);           // one of 1, i, -1, -i

enum class Family { kGnp, kTree, kCycle, kComplete, kCompleteBipartite, kStarOfTriangles };
enum class GainMode { kUniform, kFourthRoots, kConstant };

struct GenerateOptions {
  Family family = Family::kGnp;
  int n = 6;                 // vertices; for star-of-triangles, the triangle count
  int q = 0;                 // second part size for complete-bipartite
  double edge_prob = 0.5;    // gnp only
  GainMode gain_mode = GainMode::kUniform;
  double constant_theta_pi = 0.0;  // for GainMode::kConstant
  std::uint64_t seed = 0;
};

GainGraph generate_graph(const GenerateOptions& opts);

// Structure-preserving randomizers used by the probe operations and tests.
GainGraph with_random_gains(const GainGraph& g, std::mt19937_64& rng);
GainGraph with_fourth_root_gains(const GainGraph& g, std::mt19937_64& rng);
GainGraph with_constant_gains(const GainGraph& g, UnitGain gain);
SwitchingFunction random_switching(int n, std::mt19937_64& rng);

// Uniform labelled tree on n vertices via a random Pruefer sequence.
GainGraph random_tree(int n, std::mt19937_64& rng);

// G(n, p) edges, then a spanning tree patched in so the result is connected.
GainGraph random_connected_gnp(int n, double p, std::mt19937_64& rng);

// Random tree plus one extra edge: connected with exactly one cycle.
GainGraph random_unicyclic(int n, std::mt19937_64& rng);

}  // namespace gaingraph
