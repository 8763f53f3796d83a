#pragma once

#include "flab/kernel_run.hpp"

namespace flab {

// Level-synchronous worker-parallel form of the masked-submatrix kernel. Each
// level splits the frontier into contiguous chunks, one per worker:
//
//   discovery    workers scan their chunk's rows; an optimistic relaxed load
//                of the visited flag gates the (counted) algebraic update,
//                then an atomic exchange claims the vertex. Claim losers are
//                counted as duplicates and dropped, so duplicates never reach
//                the frontier. Winners buffer discoveries worker-locally.
//   barrier 1    per-worker discovery counts become visible.
//   publication  each worker sums the counts below its id (exclusive prefix)
//                and copies its buffer into a private, gap-free slice of L.
//   barrier 2    frontier cursors advance and the x/y roles swap.
//
// With one worker the claim always succeeds and the schedule degenerates to
// the sequential kernel, so the whole KernelRun is bit-identical to
// bfs_submatrix. Total evals are 2 * (reached - 1 + duplicates); duplicates
// are bounded by nnz because each nonzero is evaluated at most once per
// claim window.
//
// workers == 0 is a configuration error (std::invalid_argument).
KernelRun bfs_parallel(const CsrMatrix& a, Vertex source, const Semiring& s,
                       unsigned workers);

}  // namespace flab
