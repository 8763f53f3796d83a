#include "flab/bfs_submatrix.hpp"

#include <stdexcept>

namespace flab {

KernelRun bfs_submatrix(const CsrMatrix& a, Vertex source, const Semiring& s,
                        SubmatrixTrace* trace) {
  if (source >= a.n_rows)
    throw std::invalid_argument("bfs source out of range");

  KernelRun run;
  run.variant = Variant::Submatrix;
  BfsOutput& out = run.output;
  out.levels.assign(a.n_rows, kUnreached);
  out.parents.assign(a.n_rows, a.n_rows);
  out.levels[source] = 0;
  out.frontier_sizes.push_back(1);

  std::vector<Scalar> x(a.n_rows, s.zero), y(a.n_rows, s.zero);
  std::vector<std::uint8_t> t(a.n_rows, 0);
  std::vector<Vertex> l(a.n_rows);
  x[source] = s.one;
  l[0] = source;
  std::uint64_t start = 0, end = 1, z = 1;

  for (std::uint32_t lvl = 1;; ++lvl) {
    for (std::uint64_t pos = start; pos < end; ++pos) {
      Vertex j = l[pos];
      if (trace) trace->projected_columns.push_back(j);
      Scalar xj = x[j];
      for (std::uint64_t k = a.row_ptr[j]; k < a.row_ptr[j + 1]; ++k) {
        Vertex i = a.col_idx[k];
        if (t[i]) continue;  // masked row of the submatrix, not multiplied
        y[i] = evaluate(s, y[i], xj, a.values[k], run.ops);
        if (trace) trace->touched.emplace_back(i, j);
        t[i] = 1;
        l[z++] = i;
        out.levels[i] = lvl;
        out.parents[i] = j;
      }
      t[j] = 1;
      x[j] = s.zero;
    }
    if (z == end) break;  // end of the component
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

KernelRun bfs_submatrix_allnz(const CsrMatrix& a, Vertex source,
                              const Semiring& s) {
  if (source >= a.n_rows)
    throw std::invalid_argument("bfs source out of range");

  KernelRun run;
  run.variant = Variant::SubmatrixAllNz;
  BfsOutput& out = run.output;
  out.levels.assign(a.n_rows, kUnreached);
  out.parents.assign(a.n_rows, a.n_rows);
  out.levels[source] = 0;
  out.frontier_sizes.push_back(1);

  std::vector<Scalar> x(a.n_rows, s.zero), y(a.n_rows, s.zero);
  std::vector<std::uint8_t> t(a.n_rows, 0);
  // Discovery entries are appended once per counted nonzero, so undirected
  // runs use at most m + 1 slots of this; nnz + 1 also covers directed input.
  std::vector<Vertex> l(a.nnz() + 1);
  x[source] = s.one;
  l[0] = source;
  std::uint64_t start = 0, end = 1, z = 1;

  for (std::uint32_t lvl = 1;; ++lvl) {
    std::uint64_t fresh = 0;
    for (std::uint64_t pos = start; pos < end; ++pos) {
      Vertex j = l[pos];
      if (t[j]) continue;  // duplicate entry, row already projected
      Scalar xj = x[j];
      for (std::uint64_t k = a.row_ptr[j]; k < a.row_ptr[j + 1]; ++k) {
        Vertex i = a.col_idx[k];
        if (t[i]) continue;
        y[i] = evaluate(s, y[i], xj, a.values[k], run.ops);
        // No visited update here: i is marked only when its own row runs,
        // so later frontier rows may append i again.
        l[z++] = i;
        if (out.levels[i] == kUnreached) {
          out.levels[i] = lvl;
          out.parents[i] = j;
          ++fresh;
        }
      }
      t[j] = 1;
      x[j] = s.zero;
    }
    if (fresh > 0) out.frontier_sizes.push_back(fresh);
    if (z == end) break;
    start = end;
    end = z;
    std::swap(x, y);
  }

  out.reached = 0;
  for (std::uint64_t size : out.frontier_sizes) out.reached += size;
  run.ops.steps = out.frontier_sizes.size();
  run.ops.frontier_sizes = out.frontier_sizes;
  return run;
}

KernelRun bfs_submatrix_generic(const CsrMatrix& a, Vertex source,
                                const Semiring& s) {
  // Egress-rowwise storage means stored row j is traversal column j.
  auto csr_column = [&a](Vertex j, auto&& emit) {
    for (std::uint64_t k = a.row_ptr[j]; k < a.row_ptr[j + 1]; ++k)
      emit(a.col_idx[k], a.values[k]);
  };
  return masked_submatrix_bfs(a.n_rows, csr_column, source, s);
}

}  // namespace flab
