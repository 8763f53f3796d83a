#include "flab/semiring.hpp"

#include <stdexcept>

namespace flab {
namespace {

constexpr Scalar kMax = std::numeric_limits<Scalar>::max();

Scalar sat_add(Scalar a, Scalar b) {
  Scalar c = a + b;
  return c < a ? kMax : c;
}

Scalar sat_mul(Scalar a, Scalar b) {
  if (a == 0 || b == 0) return 0;
  if (a > kMax / b) return kMax;
  return a * b;
}

Scalar bit_or(Scalar a, Scalar b) { return a | b; }
Scalar bit_and(Scalar a, Scalar b) { return a & b; }
Scalar take_min(Scalar a, Scalar b) { return a < b ? a : b; }

bool zero_is_0(Scalar v) { return v == 0; }
bool zero_is_inf(Scalar v) { return v == kTropicalInf; }

}  // namespace

const Semiring& boolean_semiring() {
  static const Semiring s{SemiringId::Boolean, 0, 1, bit_or, bit_and, zero_is_0};
  return s;
}

const Semiring& arithmetic_semiring() {
  static const Semiring s{SemiringId::Arithmetic, 0, 1, sat_add, sat_mul,
                          zero_is_0};
  return s;
}

// times is saturating addition, so +inf absorbs as the annihilator law wants.
const Semiring& tropical_semiring() {
  static const Semiring s{SemiringId::TropicalMinPlus, kTropicalInf, 0,
                          take_min, sat_add, zero_is_inf};
  return s;
}

const Semiring& semiring_by_id(SemiringId id) {
  switch (id) {
    case SemiringId::Boolean: return boolean_semiring();
    case SemiringId::Arithmetic: return arithmetic_semiring();
    case SemiringId::TropicalMinPlus: return tropical_semiring();
  }
  throw std::invalid_argument("unknown semiring id");
}

const Semiring& semiring_by_name(const std::string& name) {
  if (name == "boolean") return boolean_semiring();
  if (name == "arithmetic") return arithmetic_semiring();
  if (name == "tropical") return tropical_semiring();
  throw std::invalid_argument("unknown semiring: " + name);
}

const char* semiring_name(SemiringId id) {
  switch (id) {
    case SemiringId::Boolean: return "boolean";
    case SemiringId::Arithmetic: return "arithmetic";
    case SemiringId::TropicalMinPlus: return "tropical";
  }
  return "?";
}

}  // namespace flab
