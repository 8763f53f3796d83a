#pragma once

#include <string>

#include "flab/bfs_oracle.hpp"
#include "flab/semiring.hpp"

namespace flab {

enum class Variant { SpMV, SpMSpV, SpMmSpV, Submatrix, SubmatrixAllNz, Parallel };

// CLI spellings: spmv, spmspv, spmmspv, submatrix, submatrix-allnz, parallel.
const char* variant_name(Variant v);
Variant variant_by_name(const std::string& name);

// Everything one algebraic BFS run produces: the traversal itself plus the
// exact operation counts it cost.
struct KernelRun {
  BfsOutput output;
  OpReport ops;
  Variant variant;
};

}  // namespace flab
