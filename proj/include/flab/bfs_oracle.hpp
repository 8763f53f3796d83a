#pragma once

#include "flab/graph.hpp"

namespace flab {

// Hop count for vertices the traversal never found.
inline constexpr std::uint32_t kUnreached =
    std::numeric_limits<std::uint32_t>::max();

// Traversal result shared by the combinatorial oracle and every algebraic
// kernel. parents[v] is the neighbor that discovered v, or n for the source
// and unreached vertices. frontier_sizes[k] is the number of vertices at
// level k, so the sizes sum to reached.
struct BfsOutput {
  std::vector<std::uint32_t> levels;
  std::vector<Vertex> parents;
  std::vector<std::uint64_t> frontier_sizes;
  std::uint64_t reached = 0;

  bool operator==(const BfsOutput&) const = default;
};

// Queue-based reference BFS. With ascending columns per row the discovery
// order is deterministic, which every equivalence check relies on. Throws
// std::invalid_argument when source is out of range.
BfsOutput bfs_combinatorial(const CsrMatrix& a, Vertex source);

}  // namespace flab
