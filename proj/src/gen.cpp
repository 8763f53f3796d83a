#include "flab/gen.hpp"

#include <algorithm>
#include <numeric>

namespace flab {

EdgeList gnp_graph(Vertex n, double p, RngEngine& rng, bool directed) {
  EdgeList g;
  g.n = n;
  g.directed = directed;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return normalize(std::move(g));
}

EdgeList connected_gnp_graph(Vertex n, double p, RngEngine& rng) {
  EdgeList g = gnp_graph(n, p, rng, false);
  if (n < 2) return g;
  // Random spanning tree: attach each vertex (in shuffled order) to an
  // already-attached one.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (Vertex i = 1; i < n; ++i) {
    std::uniform_int_distribution<Vertex> pick(0, i - 1);
    g.edges.emplace_back(order[pick(rng)], order[i]);
  }
  return normalize(std::move(g));
}

EdgeList path_graph(Vertex n) {
  EdgeList g;
  g.n = n;
  for (Vertex i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

EdgeList star_graph(Vertex leaves) {
  EdgeList g;
  g.n = leaves + 1;
  for (Vertex i = 1; i <= leaves; ++i) g.edges.emplace_back(0, i);
  return g;
}

EdgeList clique_graph(Vertex n) {
  EdgeList g;
  g.n = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

}  // namespace flab
