#include "flab/bfs_baselines.hpp"

#include <algorithm>
#include <stdexcept>

namespace flab {
namespace {

// Dense and unmasked sparse products cannot tell on their own when the
// traversal is complete, so both run for the oracle's level count.
std::uint64_t oracle_step_count(const CsrMatrix& a, Vertex source) {
  return bfs_combinatorial(a, source).frontier_sizes.size();
}

KernelRun make_run(Variant v, Vertex n, Vertex source) {
  if (source >= n) throw std::invalid_argument("bfs source out of range");
  KernelRun run;
  run.variant = v;
  run.output.levels.assign(n, kUnreached);
  run.output.parents.assign(n, n);
  run.output.levels[source] = 0;
  run.output.frontier_sizes.push_back(1);
  return run;
}

void finish_run(KernelRun& run) {
  run.output.reached = 0;
  for (std::uint64_t size : run.output.frontier_sizes)
    run.output.reached += size;
  run.ops.steps = run.output.frontier_sizes.size();
  run.ops.frontier_sizes = run.output.frontier_sizes;
}

}  // namespace

KernelRun bfs_spmv(const CsrMatrix& a, Vertex source, const Semiring& s) {
  KernelRun run = make_run(Variant::SpMV, a.n_rows, source);
  BfsOutput& out = run.output;
  std::uint64_t steps = oracle_step_count(a, source);

  std::vector<Scalar> x(a.n_rows, s.zero), y(a.n_rows, s.zero);
  x[source] = s.one;

  for (std::uint32_t lvl = 1; lvl <= steps; ++lvl) {
    std::fill(y.begin(), y.end(), s.zero);
    std::uint64_t fresh = 0;
    for (Vertex j = 0; j < a.n_rows; ++j) {
      Scalar xj = x[j];
      bool live = !s.is_zero(xj);
      for (std::uint64_t k = a.row_ptr[j]; k < a.row_ptr[j + 1]; ++k) {
        Vertex i = a.col_idx[k];
        y[i] = evaluate(s, y[i], xj, a.values[k], run.ops);
        if (live && out.levels[i] == kUnreached) {
          out.levels[i] = lvl;
          out.parents[i] = j;
          ++fresh;
        }
      }
    }
    if (fresh > 0) out.frontier_sizes.push_back(fresh);
    std::swap(x, y);
  }

  finish_run(run);
  return run;
}

KernelRun bfs_spmspv(const CsrMatrix& a, Vertex source, const Semiring& s) {
  KernelRun run = make_run(Variant::SpMSpV, a.n_rows, source);
  BfsOutput& out = run.output;
  std::uint64_t steps = oracle_step_count(a, source);

  std::vector<Scalar> x(a.n_rows, s.zero), y(a.n_rows, s.zero);
  x[source] = s.one;
  std::vector<Vertex> supp{source};
  std::vector<Vertex> touched;

  for (std::uint32_t lvl = 1; lvl <= steps; ++lvl) {
    touched.clear();
    std::uint64_t fresh = 0;
    for (Vertex j : supp) {
      Scalar xj = x[j];
      for (std::uint64_t k = a.row_ptr[j]; k < a.row_ptr[j + 1]; ++k) {
        Vertex i = a.col_idx[k];
        if (s.is_zero(y[i])) touched.push_back(i);
        y[i] = evaluate(s, y[i], xj, a.values[k], run.ops);
        if (out.levels[i] == kUnreached) {
          out.levels[i] = lvl;
          out.parents[i] = j;
          ++fresh;
        }
      }
    }
    // The products never vanish (stored values are one-like), so this step's
    // writes are exactly supp(x_{k+1}). Visited vertices stay in the support,
    // which is what makes the vector saturate toward the component.
    for (Vertex j : supp) x[j] = s.zero;
    std::sort(touched.begin(), touched.end());
    for (Vertex i : touched) {
      x[i] = y[i];
      y[i] = s.zero;
    }
    supp = touched;
    if (fresh > 0) out.frontier_sizes.push_back(fresh);
  }

  finish_run(run);
  return run;
}

KernelRun bfs_spmmspv(const CsrMatrix& a, Vertex source, const Semiring& s) {
  KernelRun run = make_run(Variant::SpMmSpV, a.n_rows, source);
  BfsOutput& out = run.output;

  std::vector<Scalar> x(a.n_rows, s.zero), y(a.n_rows, s.zero);
  std::vector<std::uint8_t> t(a.n_rows, 0);
  std::vector<Vertex> l(a.n_rows);
  std::vector<Vertex> touched;
  x[source] = s.one;
  l[0] = source;
  std::uint64_t start = 0, end = 1, z = 1;

  for (std::uint32_t lvl = 1;; ++lvl) {
    touched.clear();
    for (std::uint64_t pos = start; pos < end; ++pos) {
      Vertex j = l[pos];
      Scalar xj = x[j];
      for (std::uint64_t k = a.row_ptr[j]; k < a.row_ptr[j + 1]; ++k) {
        Vertex i = a.col_idx[k];
        // Unconditional update: the mask is consulted only afterwards, so
        // visited vertices still cost operations, just not frontier writes.
        y[i] = evaluate(s, y[i], xj, a.values[k], run.ops);
        touched.push_back(i);
        if (!t[i]) {
          t[i] = 1;
          l[z++] = i;
          out.levels[i] = lvl;
          out.parents[i] = j;
        }
      }
      t[j] = 1;
      x[j] = s.zero;
    }
    // Scrub updates the mask rejected; only fresh frontier values survive.
    for (Vertex i : touched)
      if (out.levels[i] != lvl) y[i] = s.zero;
    if (z == end) break;
    out.frontier_sizes.push_back(z - end);
    start = end;
    end = z;
    std::swap(x, y);
  }

  finish_run(run);
  return run;
}

}  // namespace flab
