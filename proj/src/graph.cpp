#include "flab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace flab {

EdgeList normalize(EdgeList g) {
  std::vector<Edge> kept;
  kept.reserve(g.edges.size());
  for (Edge e : g.edges) {
    if (e.first >= g.n || e.second >= g.n)
      throw std::invalid_argument("edge endpoint " +
                                  std::to_string(std::max(e.first, e.second)) +
                                  " out of range for n=" + std::to_string(g.n));
    if (e.first == e.second) continue;
    if (!g.directed && e.first > e.second) std::swap(e.first, e.second);
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  g.edges = std::move(kept);
  return g;
}

CsrMatrix build_csr(const EdgeList& g, const Semiring& s) {
  CsrMatrix a;
  a.n_rows = g.n;
  a.n_cols = g.n;
  a.row_ptr.assign(static_cast<std::size_t>(g.n) + 1, 0);

  for (const Edge& e : g.edges) {
    if (e.first >= g.n || e.second >= g.n)
      throw std::invalid_argument("edge endpoint out of range");
    a.row_ptr[e.first + 1]++;
    if (!g.directed) a.row_ptr[e.second + 1]++;
  }
  for (Vertex i = 0; i < g.n; ++i) a.row_ptr[i + 1] += a.row_ptr[i];

  a.col_idx.resize(a.row_ptr[g.n]);
  a.values.assign(a.row_ptr[g.n], s.one);

  // Normalized edges are sorted by (u, v), so the cursor fill leaves each
  // row's forward columns ascending; rows gaining reverse columns get sorted.
  std::vector<std::uint64_t> cursor(a.row_ptr.begin(), a.row_ptr.end() - 1);
  for (const Edge& e : g.edges) {
    a.col_idx[cursor[e.first]++] = e.second;
    if (!g.directed) a.col_idx[cursor[e.second]++] = e.first;
  }
  if (!g.directed) {
    for (Vertex i = 0; i < g.n; ++i)
      std::sort(a.col_idx.begin() + a.row_ptr[i],
                a.col_idx.begin() + a.row_ptr[i + 1]);
  }
  return a;
}

CsrMatrix transpose(const CsrMatrix& a) {
  CsrMatrix t;
  t.n_rows = a.n_cols;
  t.n_cols = a.n_rows;
  t.row_ptr.assign(static_cast<std::size_t>(t.n_rows) + 1, 0);
  for (Vertex c : a.col_idx) t.row_ptr[c + 1]++;
  for (Vertex i = 0; i < t.n_rows; ++i) t.row_ptr[i + 1] += t.row_ptr[i];

  t.col_idx.resize(a.nnz());
  t.values.resize(a.nnz());
  std::vector<std::uint64_t> cursor(t.row_ptr.begin(), t.row_ptr.end() - 1);
  // Scanning rows in order keeps each output row's columns ascending.
  for (Vertex i = 0; i < a.n_rows; ++i) {
    for (std::uint64_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      std::uint64_t slot = cursor[a.col_idx[k]]++;
      t.col_idx[slot] = i;
      t.values[slot] = a.values[k];
    }
  }
  return t;
}

bool structurally_equal(const CsrMatrix& a, const CsrMatrix& b) {
  return a.n_rows == b.n_rows && a.n_cols == b.n_cols &&
         a.row_ptr == b.row_ptr && a.col_idx == b.col_idx;
}

bool is_structurally_symmetric(const CsrMatrix& a) {
  if (a.n_rows != a.n_cols) return false;
  return structurally_equal(a, transpose(a));
}

EdgeList to_edge_list(const CsrMatrix& a, bool directed) {
  EdgeList g;
  g.n = a.n_rows;
  g.directed = directed;
  for (Vertex i = 0; i < a.n_rows; ++i) {
    for (std::uint64_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      Vertex j = a.col_idx[k];
      if (directed || i < j) g.edges.emplace_back(i, j);
    }
  }
  return normalize(std::move(g));
}

DegreeStats degree_stats(const CsrMatrix& a) {
  if (!is_structurally_symmetric(a))
    throw std::invalid_argument("degree_stats needs an undirected adjacency");
  DegreeStats d;
  d.n = a.n_rows;
  d.m = a.nnz() / 2;
  if (a.n_rows == 0) return d;
  d.min_degree = std::numeric_limits<Vertex>::max();
  for (Vertex i = 0; i < a.n_rows; ++i) {
    Vertex deg = static_cast<Vertex>(a.row_ptr[i + 1] - a.row_ptr[i]);
    d.min_degree = std::min(d.min_degree, deg);
    d.max_degree = std::max(d.max_degree, deg);
  }
  d.mean_degree = 2.0 * static_cast<double>(d.m) / static_cast<double>(d.n);
  return d;
}

}  // namespace flab
