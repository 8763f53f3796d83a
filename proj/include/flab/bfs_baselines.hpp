#pragma once

#include "flab/kernel_run.hpp"

namespace flab {

// Conventional algebraic BFS baselines. All three iterate the recurrence
// x_{k+1} = A^T x_k on the egress-rowwise adjacency; they differ only in how
// much of the matrix each step touches. Levels come from first-discovery
// bookkeeping, never from inspecting scalar values, so the traversal output
// is identical under every semiring.

// Dense-vector product: every stored nonzero is multiplied each step. Runs
// exactly as many steps as the oracle has levels, the step count a dense
// iteration cannot detect on its own.
KernelRun bfs_spmv(const CsrMatrix& a, Vertex source, const Semiring& s);

// Sparse-vector product without masking: each step multiplies the rows of
// supp(x_k). Already-visited vertices re-enter the support, so the vector
// saturates toward the whole reached component.
KernelRun bfs_spmspv(const CsrMatrix& a, Vertex source, const Semiring& s);

// Masked sparse product: only true frontier rows are multiplied, but the
// visited test runs after the algebraic update, so masking saves writes and
// not operations. Each reached vertex's row is multiplied exactly once.
KernelRun bfs_spmmspv(const CsrMatrix& a, Vertex source, const Semiring& s);

}  // namespace flab
