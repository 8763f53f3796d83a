#include "flab/run_record.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace flab {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::SpMV: return "spmv";
    case Variant::SpMSpV: return "spmspv";
    case Variant::SpMmSpV: return "spmmspv";
    case Variant::Submatrix: return "submatrix";
    case Variant::SubmatrixAllNz: return "submatrix-allnz";
    case Variant::Parallel: return "parallel";
  }
  return "?";
}

Variant variant_by_name(const std::string& name) {
  if (name == "spmv") return Variant::SpMV;
  if (name == "spmspv") return Variant::SpMSpV;
  if (name == "spmmspv") return Variant::SpMmSpV;
  if (name == "submatrix") return Variant::Submatrix;
  if (name == "submatrix-allnz") return Variant::SubmatrixAllNz;
  if (name == "parallel") return Variant::Parallel;
  throw std::invalid_argument("unknown variant: " + name);
}

std::string run_record_csv_header() {
  return "graph,n,m,source,variant,semiring,workers,steps,reached,"
         "semiring_evals,nonzeros_touched,wallclock_seconds";
}

namespace {

std::string format_seconds(double seconds) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

}  // namespace

std::string run_record_csv_row(const RunRecord& r) {
  std::string row;
  row += r.graph;
  row += ',' + std::to_string(r.n);
  row += ',' + std::to_string(r.m);
  row += ',' + std::to_string(r.source);
  row += ',' + r.variant;
  row += ',' + r.semiring;
  row += ',' + std::to_string(r.workers);
  row += ',' + std::to_string(r.steps);
  row += ',' + std::to_string(r.reached);
  row += ',' + std::to_string(r.semiring_evals);
  row += ',' + std::to_string(r.nonzeros_touched);
  row += ',' + format_seconds(r.wallclock_seconds);
  return row;
}

std::string run_record_json(const RunRecord& r) {
  nlohmann::json j{{"graph", r.graph},
                   {"n", r.n},
                   {"m", r.m},
                   {"source", r.source},
                   {"variant", r.variant},
                   {"semiring", r.semiring},
                   {"workers", r.workers},
                   {"steps", r.steps},
                   {"reached", r.reached},
                   {"semiring_evals", r.semiring_evals},
                   {"nonzeros_touched", r.nonzeros_touched},
                   {"wallclock_seconds", r.wallclock_seconds}};
  return j.dump();
}

}  // namespace flab
