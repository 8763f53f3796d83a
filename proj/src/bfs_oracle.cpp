#include "flab/bfs_oracle.hpp"

#include <stdexcept>

namespace flab {

BfsOutput bfs_combinatorial(const CsrMatrix& a, Vertex source) {
  if (source >= a.n_rows)
    throw std::invalid_argument("bfs source out of range");

  BfsOutput out;
  out.levels.assign(a.n_rows, kUnreached);
  out.parents.assign(a.n_rows, a.n_rows);

  // The queue is also the output order, so level boundaries are contiguous
  // runs and frontier sizes fall out of a single pass.
  std::vector<Vertex> queue;
  queue.reserve(a.n_rows);
  queue.push_back(source);
  out.levels[source] = 0;

  std::size_t head = 0;
  while (head < queue.size()) {
    Vertex u = queue[head++];
    std::uint32_t next_level = out.levels[u] + 1;
    for (std::uint64_t k = a.row_ptr[u]; k < a.row_ptr[u + 1]; ++k) {
      Vertex v = a.col_idx[k];
      if (out.levels[v] != kUnreached) continue;
      out.levels[v] = next_level;
      out.parents[v] = u;
      queue.push_back(v);
    }
  }

  out.reached = queue.size();
  std::uint32_t level = 0;
  std::uint64_t count = 0;
  for (Vertex v : queue) {
    if (out.levels[v] != level) {
      out.frontier_sizes.push_back(count);
      level = out.levels[v];
      count = 0;
    }
    ++count;
  }
  if (count > 0) out.frontier_sizes.push_back(count);
  return out;
}

}  // namespace flab
