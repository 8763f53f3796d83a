#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace flab {

// Every semiring shares one 64-bit scalar domain so kernels never box values.
// Boolean restricts itself to {0,1}; the tropical min-plus semiring reserves
// the maximum representable value as +infinity.
using Scalar = std::uint64_t;

inline constexpr Scalar kTropicalInf = std::numeric_limits<Scalar>::max();

enum class SemiringId { Boolean, Arithmetic, TropicalMinPlus };

// A (plus, times) algebra over Scalar. Instances are immutable singletons and
// safe to share across workers. `one` seeds source vectors: under min-plus the
// multiplicative identity is 0, which is what makes vector entries behave as
// hop distances.
struct Semiring {
  SemiringId id;
  Scalar zero;  // additive identity, annihilates under times
  Scalar one;   // multiplicative identity
  Scalar (*plus)(Scalar, Scalar);
  Scalar (*times)(Scalar, Scalar);
  bool (*is_zero)(Scalar);
};

const Semiring& boolean_semiring();
const Semiring& arithmetic_semiring();
const Semiring& tropical_semiring();

const Semiring& semiring_by_id(SemiringId id);
// Accepts "boolean", "arithmetic" or "tropical"; throws std::invalid_argument
// on anything else.
const Semiring& semiring_by_name(const std::string& name);
const char* semiring_name(SemiringId id);

// Measurement attached to one kernel run. A counted update performs exactly
// one plus and one times, so semiring_evals == 2 * nonzeros_touched always.
struct OpReport {
  std::uint64_t semiring_evals = 0;
  std::uint64_t nonzeros_touched = 0;
  std::uint64_t steps = 0;
  std::vector<std::uint64_t> frontier_sizes;
  // Discoveries that lost a claim race and were dropped before frontier
  // publication. Only the parallel kernel can produce a nonzero count.
  std::uint64_t duplicates = 0;

  // Folds another report's counters in; step and frontier bookkeeping stays
  // with the coordinating side.
  void absorb_counts(const OpReport& other) {
    semiring_evals += other.semiring_evals;
    nonzeros_touched += other.nonzeros_touched;
    duplicates += other.duplicates;
  }
};

// One counted inner-loop update: plus(acc, times(x, a)). Kernels count here,
// at the call site; raw s.plus / s.times stay uninstrumented.
inline Scalar evaluate(const Semiring& s, Scalar acc, Scalar x, Scalar a,
                       OpReport& counter) {
  counter.semiring_evals += 2;
  counter.nonzeros_touched += 1;
  return s.plus(acc, s.times(x, a));
}

}  // namespace flab
