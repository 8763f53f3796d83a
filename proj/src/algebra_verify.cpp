#include "flab/algebra_verify.hpp"

#include <random>
#include <stdexcept>

#include "flab/bfs_oracle.hpp"
#include "flab/bfs_submatrix.hpp"
#include "flab/gen.hpp"

namespace flab {
namespace {

constexpr Vertex kDenseCap = 64;

bool is_symmetric(const DenseSquareMatrix& a) {
  for (Vertex i = 0; i < a.n; ++i)
    for (Vertex j = i + 1; j < a.n; ++j)
      if (a.at(i, j) != a.at(j, i)) return false;
  return true;
}

void check_walk_input(const DenseSquareMatrix& a, Vertex source) {
  if (a.n > kDenseCap)
    throw std::invalid_argument("dense sequence walk capped at n = 64");
  if (source >= a.n) throw std::invalid_argument("source out of range");
  if (!is_symmetric(a))
    throw std::invalid_argument("sequence walk needs a symmetric adjacency");
}

bool all_zero(const std::vector<Scalar>& x, const Semiring& s) {
  for (Scalar v : x)
    if (!s.is_zero(v)) return false;
  return true;
}

// Standard column-vector product y = A x.
std::vector<Scalar> dense_matvec(const DenseSquareMatrix& a,
                                 const std::vector<Scalar>& x,
                                 const Semiring& s) {
  std::vector<Scalar> y(a.n, s.zero);
  for (Vertex i = 0; i < a.n; ++i)
    for (Vertex j = 0; j < a.n; ++j)
      y[i] = s.plus(y[i], s.times(a.at(i, j), x[j]));
  return y;
}

// The masked recurrence from x_1 = e_source. steps[k-1] holds S_k, x_k and
// the recurrence-route A_k; the walk ends with the last nonzero x_k.
std::vector<SelectionStep> masked_walk(const DenseSquareMatrix& a,
                                       Vertex source, const Semiring& s) {
  std::vector<SelectionStep> steps;
  SelectionMatrix v{a.n, std::vector<std::uint8_t>(a.n, 1)};
  std::vector<Scalar> x(a.n, s.zero);
  x[source] = s.one;
  DenseSquareMatrix a_k = a;  // A_1 = A

  while (!all_zero(x, s) && steps.size() <= a.n + 1) {
    steps.push_back({v, a_k, x});
    // V_{k+1} drops supp(x_k); re-dropping resurfaced vertices is a no-op.
    SelectionMatrix next_v = v;
    for (Vertex i = 0; i < a.n; ++i)
      if (!s.is_zero(x[i])) next_v.diag[i] = 0;
    // x_{k+1} = A[V_k, V_k] x_k, the direct structural masking route.
    x = dense_matvec(mask_both_sides(v, a, s), x, s);
    // A_{k+1} = S_{k+1} A_k S_{k+1}, the product route.
    DenseSquareMatrix sel = to_dense(next_v, s);
    a_k = dense_multiply(sel, dense_multiply(a_k, sel, s), s);
    v = next_v;
  }
  return steps;
}

}  // namespace

DenseSquareMatrix dense_from_edges(const EdgeList& g, const Semiring& s) {
  DenseSquareMatrix a(g.n, s.zero);
  for (const Edge& e : g.edges) {
    a.at(e.first, e.second) = s.one;
    if (!g.directed) a.at(e.second, e.first) = s.one;
  }
  return a;
}

DenseSquareMatrix dense_from_csr(const CsrMatrix& a, const Semiring& s) {
  if (a.n_rows != a.n_cols)
    throw std::invalid_argument("dense conversion needs a square matrix");
  DenseSquareMatrix d(a.n_rows, s.zero);
  for (Vertex i = 0; i < a.n_rows; ++i)
    for (std::uint64_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k)
      d.at(i, a.col_idx[k]) = a.values[k];
  return d;
}

DenseSquareMatrix to_dense(const SelectionMatrix& sel, const Semiring& s) {
  DenseSquareMatrix d(sel.n, s.zero);
  for (Vertex i = 0; i < sel.n; ++i)
    if (sel.diag[i]) d.at(i, i) = s.one;
  return d;
}

std::vector<Scalar> dense_transpose_matvec(const DenseSquareMatrix& a,
                                           const std::vector<Scalar>& x,
                                           const Semiring& s) {
  if (x.size() != a.n) throw std::invalid_argument("matvec size mismatch");
  std::vector<Scalar> y(a.n, s.zero);
  for (Vertex i = 0; i < a.n; ++i) {
    for (Vertex j = 0; j < a.n; ++j)
      y[j] = s.plus(y[j], s.times(a.at(i, j), x[i]));
  }
  return y;
}

std::vector<Scalar> csr_transpose_matvec(const CsrMatrix& a,
                                         const std::vector<Scalar>& x,
                                         const Semiring& s) {
  if (x.size() != a.n_rows) throw std::invalid_argument("matvec size mismatch");
  std::vector<Scalar> y(a.n_cols, s.zero);
  for (Vertex i = 0; i < a.n_rows; ++i)
    for (std::uint64_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k)
      y[a.col_idx[k]] = s.plus(y[a.col_idx[k]], s.times(a.values[k], x[i]));
  return y;
}

DenseSquareMatrix dense_multiply(const DenseSquareMatrix& a,
                                 const DenseSquareMatrix& b,
                                 const Semiring& s) {
  if (a.n != b.n) throw std::invalid_argument("product size mismatch");
  DenseSquareMatrix c(a.n, s.zero);
  for (Vertex i = 0; i < a.n; ++i)
    for (Vertex k = 0; k < a.n; ++k) {
      Scalar aik = a.at(i, k);
      if (s.is_zero(aik)) continue;
      for (Vertex j = 0; j < a.n; ++j)
        c.at(i, j) = s.plus(c.at(i, j), s.times(aik, b.at(k, j)));
    }
  return c;
}

DenseSquareMatrix mask_both_sides(const SelectionMatrix& sel,
                                  const DenseSquareMatrix& a,
                                  const Semiring& s) {
  if (sel.n != a.n) throw std::invalid_argument("selection size mismatch");
  DenseSquareMatrix c(a.n, s.zero);
  for (Vertex i = 0; i < a.n; ++i) {
    if (!sel.diag[i]) continue;
    for (Vertex j = 0; j < a.n; ++j)
      if (sel.diag[j]) c.at(i, j) = a.at(i, j);
  }
  return c;
}

bool supports_equal(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                    const Semiring& s) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (s.is_zero(a[i]) != s.is_zero(b[i])) return false;
  return true;
}

bool supports_equal(const DenseSquareMatrix& a, const DenseSquareMatrix& b,
                    const Semiring& s) {
  return a.n == b.n && supports_equal(a.entries, b.entries, s);
}

std::vector<SelectionStep> selection_sequence(const DenseSquareMatrix& a,
                                              Vertex source,
                                              const Semiring& s) {
  check_walk_input(a, source);
  std::vector<SelectionStep> steps = masked_walk(a, source, s);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const SelectionStep& st = steps[i];
    DenseSquareMatrix sel = to_dense(st.sel, s);
    if (dense_multiply(sel, sel, s) != sel)
      throw std::logic_error("selection matrix not idempotent");
    if (st.a_masked != mask_both_sides(st.sel, a, s))
      throw std::logic_error("submatrix recurrence and direct form disagree");
    if (i > 0 &&
        dense_multiply(sel, to_dense(steps[i - 1].sel, s), s) != sel)
      throw std::logic_error("selection chain product violated");
  }
  return steps;
}

MaskedPowerReport verify_masked_power(const DenseSquareMatrix& a,
                                       Vertex source, const Semiring& s,
                                       std::uint32_t k) {
  check_walk_input(a, source);
  if (k == 0) throw std::invalid_argument("step index k starts at 1");

  std::vector<SelectionStep> steps = masked_walk(a, source, s);

  // Step k of the walk; past the end the vector is empty and V is stable.
  SelectionMatrix v_k;
  std::vector<Scalar> x_k;
  if (k <= steps.size()) {
    v_k = steps[k - 1].sel;
    x_k = steps[k - 1].x;
  } else {
    v_k = steps.back().sel;
    for (Vertex i = 0; i < a.n; ++i)
      if (!s.is_zero(steps.back().x[i])) v_k.diag[i] = 0;
    x_k.assign(a.n, s.zero);
  }

  // Three routes meet here: the walk's structural-mask matvec (LHS), the
  // matrix-product powering route (RHS) and the plain iterated product y_k.
  MaskedPowerReport rep;
  DenseSquareMatrix a_k = mask_both_sides(v_k, a, s);
  rep.lhs = dense_matvec(a_k, x_k, s);

  DenseSquareMatrix power(a.n, s.zero);
  for (Vertex i = 0; i < a.n; ++i) power.at(i, i) = s.one;
  for (std::uint32_t j = 1; j < k; ++j) power = dense_multiply(power, a, s);
  std::vector<Scalar> x1(a.n, s.zero);
  x1[source] = s.one;
  rep.rhs = dense_matvec(dense_multiply(a_k, power, s), x1, s);

  std::vector<Scalar> y_k = x1;
  for (std::uint32_t j = 1; j < k; ++j) y_k = dense_matvec(a, y_k, s);
  std::vector<Scalar> masked_y = dense_matvec(a_k, y_k, s);

  rep.entrywise_equal = rep.lhs == rep.rhs;
  rep.support_equal = supports_equal(rep.lhs, rep.rhs, s);
  rep.intermediate_equal =
      supports_equal(masked_y, rep.lhs, s) &&
      (s.id != SemiringId::Boolean || masked_y == rep.lhs);
  return rep;
}

bool IdentitySuiteResult::all_passed() const {
  for (const IdentityCheck& c : checks)
    if (c.failed != 0) return false;
  return true;
}

IdentitySuiteResult run_identity_suite(std::uint64_t seed, int graph_count,
                                       Vertex max_n) {
  if (max_n > 32)
    throw std::invalid_argument("identity suite runs on graphs of n <= 32");

  enum {
    kIdem,
    kChain,
    kDirect,
    kRecurrence,
    kMaskedPowerEntrywise,
    kMaskedPowerSupport,
    kIntermediate,
    kFrontier,
    kCheckCount
  };
  IdentitySuiteResult result;
  result.checks = {
      {"selection-idempotent S.S = S", 0, 0},
      {"selection-chain S(k+1).S(k) = S(k+1)", 0, 0},
      {"submatrix-direct A(k) = S(k).A.S(k)", 0, 0},
      {"submatrix-recurrence A(k+1) = S(k+1).A(k).S(k+1)", 0, 0},
      {"masked-vs-power entrywise (boolean)", 0, 0},
      {"masked-vs-power support", 0, 0},
      {"intermediate A(k).y(k) = A(k).x(k)", 0, 0},
      {"walk-frontier matches kernel frontier", 0, 0},
  };
  auto tally = [&](int which, bool ok) {
    result.checks[which].checked += 1;
    if (!ok) result.checks[which].failed += 1;
  };

  RngEngine rng(seed);
  const double densities[] = {0.05, 0.1, 0.2, 0.35, 0.5};
  const Semiring* semirings[] = {&boolean_semiring(), &arithmetic_semiring(),
                                 &tropical_semiring()};

  for (int g = 0; g < graph_count; ++g) {
    std::uniform_int_distribution<Vertex> pick_n(2, max_n);
    Vertex n = pick_n(rng);
    double p = densities[g % 5];
    bool force_connected = g % 3 != 0;
    EdgeList el = force_connected ? connected_gnp_graph(n, p, rng)
                                  : gnp_graph(n, p, rng);
    std::uniform_int_distribution<Vertex> pick_src(0, n - 1);
    Vertex source = pick_src(rng);

    KernelRun kernel =
        bfs_submatrix(build_csr(el, boolean_semiring()), source,
                      boolean_semiring());

    for (const Semiring* sp : semirings) {
      const Semiring& s = *sp;
      DenseSquareMatrix a = dense_from_edges(el, s);
      std::vector<SelectionStep> steps = masked_walk(a, source, s);

      for (std::size_t i = 0; i < steps.size(); ++i) {
        DenseSquareMatrix sel = to_dense(steps[i].sel, s);
        tally(kIdem, dense_multiply(sel, sel, s) == sel);
        if (i > 0)
          tally(kChain,
                dense_multiply(sel, to_dense(steps[i - 1].sel, s), s) == sel);
        DenseSquareMatrix direct = mask_both_sides(steps[i].sel, a, s);
        tally(kDirect, steps[i].a_masked == direct);
        if (i + 1 < steps.size()) {
          DenseSquareMatrix next_sel = to_dense(steps[i + 1].sel, s);
          DenseSquareMatrix via_step = dense_multiply(
              next_sel, dense_multiply(direct, next_sel, s), s);
          tally(kRecurrence,
                via_step == mask_both_sides(steps[i + 1].sel, a, s));
        }

        // Fresh support of x_k inside V_k is the kernel's level k-1 set.
        bool frontier_ok = true;
        for (Vertex v = 0; v < n; ++v) {
          bool fresh = steps[i].sel.diag[v] && !s.is_zero(steps[i].x[v]);
          bool at_level = kernel.output.levels[v] == i;
          if (fresh != at_level) frontier_ok = false;
        }
        tally(kFrontier, frontier_ok);
      }

      // All steps up to the walk's own eccentricity, with the power and the
      // unmasked iterate carried incrementally. Mirrors verify_masked_power.
      DenseSquareMatrix power(n, s.zero);
      for (Vertex i = 0; i < n; ++i) power.at(i, i) = s.one;
      std::vector<Scalar> x1(n, s.zero);
      x1[source] = s.one;
      std::vector<Scalar> y_k = x1;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        DenseSquareMatrix a_k = mask_both_sides(steps[i].sel, a, s);
        std::vector<Scalar> lhs = dense_matvec(a_k, steps[i].x, s);
        std::vector<Scalar> rhs =
            dense_matvec(dense_multiply(a_k, power, s), x1, s);
        std::vector<Scalar> masked_y = dense_matvec(a_k, y_k, s);
        if (s.id == SemiringId::Boolean) tally(kMaskedPowerEntrywise, lhs == rhs);
        tally(kMaskedPowerSupport, supports_equal(lhs, rhs, s));
        tally(kIntermediate,
              supports_equal(masked_y, lhs, s) &&
                  (s.id != SemiringId::Boolean || masked_y == lhs));
        power = dense_multiply(power, a, s);
        y_k = dense_matvec(a, y_k, s);
      }
    }
  }
  return result;
}

}  // namespace flab
