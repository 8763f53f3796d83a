#pragma once

#include <cstdint>
#include <string>

#include "flab/kernel_run.hpp"

namespace flab {

// One reporting row per traversal, in emission order. wallclock_seconds wraps
// the kernel call only; it is the one column that cannot be byte-stable
// across runs.
struct RunRecord {
  std::string graph;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t source = 0;  // id in the input's own vocabulary
  std::string variant;
  std::string semiring;
  unsigned workers = 1;
  std::uint64_t steps = 0;
  std::uint64_t reached = 0;
  std::uint64_t semiring_evals = 0;
  std::uint64_t nonzeros_touched = 0;
  double wallclock_seconds = 0.0;
};

std::string run_record_csv_header();
std::string run_record_csv_row(const RunRecord& r);
std::string run_record_json(const RunRecord& r);

}  // namespace flab
