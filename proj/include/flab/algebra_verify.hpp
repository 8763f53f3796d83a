#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flab/graph.hpp"
#include "flab/semiring.hpp"

namespace flab {

// Dense-matrix checking ground for the masked-submatrix identities. The
// shrinking submatrix A_k is A with the rows and columns of visited vertices
// zeroed, equivalently S_k A S_k for the selection matrix S_k of the
// not-yet-visited set V_k. Everything here is written for graphs small
// enough that O(n^3) products are free; sequence walks are capped at n = 64.

struct DenseSquareMatrix {
  Vertex n = 0;
  std::vector<Scalar> entries;  // row-major, n * n

  DenseSquareMatrix() = default;
  DenseSquareMatrix(Vertex size, Scalar fill)
      : n(size), entries(static_cast<std::size_t>(size) * size, fill) {}

  Scalar& at(Vertex i, Vertex j) {
    return entries[static_cast<std::size_t>(i) * n + j];
  }
  const Scalar& at(Vertex i, Vertex j) const {
    return entries[static_cast<std::size_t>(i) * n + j];
  }
  bool operator==(const DenseSquareMatrix&) const = default;
};

// Diagonal 0/1 selector; multiplying by it zeroes the deselected rows or
// columns. Idempotent by construction, asserted anyway by the test suite.
struct SelectionMatrix {
  Vertex n = 0;
  std::vector<std::uint8_t> diag;

  bool operator==(const SelectionMatrix&) const = default;
};

DenseSquareMatrix dense_from_edges(const EdgeList& g, const Semiring& s);
DenseSquareMatrix dense_from_csr(const CsrMatrix& a, const Semiring& s);
// Flags materialize as s.one / s.zero on the diagonal.
DenseSquareMatrix to_dense(const SelectionMatrix& sel, const Semiring& s);

// y = A^T x, the scatter form: y(j) accumulates x(i) * A(i, j). Two routes,
// one over dense storage and one over CSR rows, compared by tests.
std::vector<Scalar> dense_transpose_matvec(const DenseSquareMatrix& a,
                                           const std::vector<Scalar>& x,
                                           const Semiring& s);
std::vector<Scalar> csr_transpose_matvec(const CsrMatrix& a,
                                         const std::vector<Scalar>& x,
                                         const Semiring& s);

DenseSquareMatrix dense_multiply(const DenseSquareMatrix& a,
                                 const DenseSquareMatrix& b, const Semiring& s);
// S A S without forming the products: rows and columns with a cleared flag
// become semiring zero.
DenseSquareMatrix mask_both_sides(const SelectionMatrix& sel,
                                  const DenseSquareMatrix& a, const Semiring& s);

bool supports_equal(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                    const Semiring& s);
bool supports_equal(const DenseSquareMatrix& a, const DenseSquareMatrix& b,
                    const Semiring& s);

// One step of the masked recurrence walk.
struct SelectionStep {
  SelectionMatrix sel;          // S_k over the not-yet-visited set V_k
  DenseSquareMatrix a_masked;   // A_k, built by the step recurrence
  std::vector<Scalar> x;        // x_k of x_{k+1} = A[V_k, V_k] x_k
};

// Walks the recurrence from x_1 = e_source until the vector empties,
// asserting at every step that the recurrence route
// A_{k+1} = S_{k+1} A_k S_{k+1} and the direct route A_k = S_k A S_k agree,
// and that S_{k+1} S_k = S_{k+1}. Throws std::logic_error on a violation,
// std::invalid_argument for asymmetric input or n > 64.
std::vector<SelectionStep> selection_sequence(const DenseSquareMatrix& a,
                                              Vertex source, const Semiring& s);

struct MaskedPowerReport {
  std::vector<Scalar> lhs;  // x_{k+1} from the masked recurrence
  std::vector<Scalar> rhs;  // A_k A^{k-1} x_1 via dense powering
  bool entrywise_equal = false;
  bool support_equal = false;
  // A_k y_k == A_k x_k where y_k = A y_{k-1} is the unmasked iterate.
  bool intermediate_equal = false;
};

MaskedPowerReport verify_masked_power(const DenseSquareMatrix& a,
                                       Vertex source, const Semiring& s,
                                       std::uint32_t k);

// Randomized identity suite over seeded small graphs; backs the verify
// subcommand and the acceptance run.
struct IdentityCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct IdentitySuiteResult {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

IdentitySuiteResult run_identity_suite(std::uint64_t seed, int graph_count,
                                       Vertex max_n);

}  // namespace flab
