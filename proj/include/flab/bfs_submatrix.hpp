#pragma once

#include <stdexcept>
#include <utility>

#include "flab/kernel_run.hpp"

namespace flab {

// BFS as repeated products with shrinking masked submatrices: step k
// multiplies A[V_{k+1}, V_k] x_k, where V_k is the not-yet-visited vertex set.
// The mask is the visited-flag array T, checked per nonzero before the
// algebraic update, so a connected undirected traversal costs exactly
// 2 * (reached - 1) semiring evaluations: each vertex beyond the source is
// produced by exactly one multiplied nonzero.

// Optional per-nonzero recording for structural checks. projected_columns
// lists every frontier column the kernel projects; touched holds each
// multiplied coordinate as (row, column) of the traversal matrix.
struct SubmatrixTrace {
  std::vector<Vertex> projected_columns;
  std::vector<Edge> touched;
};

KernelRun bfs_submatrix(const CsrMatrix& a, Vertex source, const Semiring& s,
                        SubmatrixTrace* trace = nullptr);

// The all-nonzeros variant trades the per-nonzero visited update for a
// visited test on whole frontier rows: discovered vertices are marked only
// when their own row is processed, so the discovery array may hold duplicate
// entries and a connected undirected traversal touches every edge exactly
// once, i.e. 2m evaluations.
KernelRun bfs_submatrix_allnz(const CsrMatrix& a, Vertex source,
                              const Semiring& s);

// Same recurrence written against an abstract column view instead of raw CSR
// arrays. column_of(j, emit) must call emit(i, value) for every structural
// nonzero of traversal column j in ascending i; the kernel owns the masking.
// Exists to show the algorithm is storage-format agnostic and must produce a
// bit-identical KernelRun to bfs_submatrix.
template <class ColumnFn>
KernelRun masked_submatrix_bfs(Vertex n, ColumnFn&& column_of, Vertex source,
                               const Semiring& s);

KernelRun bfs_submatrix_generic(const CsrMatrix& a, Vertex source,
                                const Semiring& s);

template <class ColumnFn>
KernelRun masked_submatrix_bfs(Vertex n, ColumnFn&& column_of, Vertex source,
                               const Semiring& s) {
  if (source >= n) throw std::invalid_argument("bfs source out of range");

  KernelRun run;
  run.variant = Variant::Submatrix;
  BfsOutput& out = run.output;
  out.levels.assign(n, kUnreached);
  out.parents.assign(n, n);
  out.levels[source] = 0;
  out.frontier_sizes.push_back(1);

  std::vector<Scalar> x(n, s.zero), y(n, s.zero);
  std::vector<std::uint8_t> t(n, 0);
  std::vector<Vertex> l(n);
  x[source] = s.one;
  l[0] = source;
  std::uint64_t start = 0, end = 1, z = 1;

  for (std::uint32_t lvl = 1;; ++lvl) {
    for (std::uint64_t pos = start; pos < end; ++pos) {
      Vertex j = l[pos];
      Scalar xj = x[j];
      column_of(j, [&](Vertex i, Scalar v) {
        if (t[i]) return;
        y[i] = evaluate(s, y[i], xj, v, run.ops);
        t[i] = 1;
        l[z++] = i;
        out.levels[i] = lvl;
        out.parents[i] = j;
      });
      t[j] = 1;
      x[j] = s.zero;
    }
    if (z == end) break;
    out.frontier_sizes.push_back(z - end);
    start = end;
    end = z;
    std::swap(x, y);
  }

  out.reached = z;
  run.ops.steps = out.frontier_sizes.size();
  run.ops.frontier_sizes = out.frontier_sizes;
  return run;
}

}  // namespace flab
