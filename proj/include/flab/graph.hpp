#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flab/semiring.hpp"

namespace flab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple graph as a normalized edge list: no self loops, no duplicate edges,
// and for undirected graphs each edge stored exactly once with u < v. Edges
// are kept sorted so equal graphs compare equal.
struct EdgeList {
  Vertex n = 0;
  bool directed = false;
  std::vector<Edge> edges;

  bool operator==(const EdgeList&) const = default;
};

// Drops self loops, canonicalizes undirected endpoints to u < v, deduplicates
// and sorts. Throws std::invalid_argument on an endpoint >= n.
EdgeList normalize(EdgeList g);

// Compressed sparse row adjacency over the shared scalar domain. Row i holds
// the out-neighbors of i (egress edges); undirected graphs are stored
// structurally symmetric with nnz = 2m. Column indices are strictly ascending
// within each row and row extents are end-exclusive.
struct CsrMatrix {
  Vertex n_rows = 0;
  Vertex n_cols = 0;
  std::vector<std::uint64_t> row_ptr;  // size n_rows + 1
  std::vector<Vertex> col_idx;
  std::vector<Scalar> values;          // parallel to col_idx

  std::uint64_t nnz() const { return col_idx.size(); }
};

// Nonzeros are the semiring's one-like value, so an edge weight of 1 doubles
// as the unit hop cost under min-plus.
CsrMatrix build_csr(const EdgeList& g, const Semiring& s);

CsrMatrix transpose(const CsrMatrix& a);

bool structurally_equal(const CsrMatrix& a, const CsrMatrix& b);
bool is_structurally_symmetric(const CsrMatrix& a);

// Inverse of build_csr up to normalization; used by round-trip checks.
EdgeList to_edge_list(const CsrMatrix& a, bool directed);

struct DegreeStats {
  Vertex n = 0;
  std::uint64_t m = 0;  // undirected edge count, nnz / 2
  Vertex min_degree = 0;
  Vertex max_degree = 0;
  double mean_degree = 0.0;  // 2m / n
};

// Undirected matrices only; throws std::invalid_argument when the structure
// is not symmetric.
DegreeStats degree_stats(const CsrMatrix& a);

}  // namespace flab
