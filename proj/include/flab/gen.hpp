#pragma once

#include <random>

#include "flab/graph.hpp"

namespace flab {

// Seeded generators behind the test corpus and the verify subcommand. All of
// them return normalized edge lists and are deterministic for a given engine
// state.

using RngEngine = std::mt19937_64;

// Erdos-Renyi G(n, p); may be disconnected.
EdgeList gnp_graph(Vertex n, double p, RngEngine& rng, bool directed = false);

// G(n, p) unioned with a random spanning tree, so connectivity is guaranteed.
EdgeList connected_gnp_graph(Vertex n, double p, RngEngine& rng);

EdgeList path_graph(Vertex n);
EdgeList star_graph(Vertex leaves);   // vertex 0 is the hub
EdgeList clique_graph(Vertex n);

}  // namespace flab
