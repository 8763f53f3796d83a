#include <doctest.h>

#include <stdexcept>

#include "flab/algebra_verify.hpp"
#include "flab/bfs_submatrix.hpp"
#include "flab/gen.hpp"
#include "flab/ingest.hpp"

using namespace flab;

namespace {
const std::string kDataDir = FLAB_TEST_DATA_DIR;

DenseSquareMatrix path5_dense(const Semiring& s, Vertex* source) {
  ParsedGraph p = parse_snap(kDataDir + "/path5.txt");
  *source = p.internal_id(2);
  return dense_from_edges(p.graph, s);
}
}  // namespace

TEST_CASE("dense construction routes agree") {
  RngEngine rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    EdgeList g = gnp_graph(8, 0.3, rng, trial % 2 == 1);
    for (const char* name : {"boolean", "tropical"}) {
      const Semiring& s = semiring_by_name(name);
      CHECK(dense_from_edges(g, s) == dense_from_csr(build_csr(g, s), s));
    }
  }
}

TEST_CASE("transpose matvec pushes along stored rows") {
  Vertex source;
  DenseSquareMatrix a = path5_dense(boolean_semiring(), &source);
  std::vector<Scalar> e(a.n, 0);
  e[source] = 1;
  std::vector<Scalar> y = dense_transpose_matvec(a, e, boolean_semiring());
  // vertex 2's only neighbor is 5, internal index 4
  CHECK(y == std::vector<Scalar>{0, 0, 0, 0, 1});

  // asymmetric case: a single arc 0 -> 1 moves mass from 0 to 1 only
  DenseSquareMatrix arc(2, 0);
  arc.at(0, 1) = 1;
  CHECK(dense_transpose_matvec(arc, {1, 0}, boolean_semiring()) ==
        std::vector<Scalar>{0, 1});
  CHECK(dense_transpose_matvec(arc, {0, 1}, boolean_semiring()) ==
        std::vector<Scalar>{0, 0});
}

TEST_CASE("dense and CSR matvec agree on random matrices") {
  RngEngine rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    EdgeList g = gnp_graph(8, 0.35, rng, trial % 2 == 0);
    for (const char* name : {"boolean", "arithmetic", "tropical"}) {
      const Semiring& s = semiring_by_name(name);
      CsrMatrix a = build_csr(g, s);
      DenseSquareMatrix d = dense_from_csr(a, s);
      std::vector<Scalar> x(g.n, s.zero);
      for (Vertex v = 0; v < g.n; ++v)
        if (rng() % 2) x[v] = s.one;
      CHECK(dense_transpose_matvec(d, x, s) == csr_transpose_matvec(a, x, s));
    }
  }
}

TEST_CASE("selection masking zeroes rows and columns") {
  Vertex source;
  DenseSquareMatrix a = path5_dense(boolean_semiring(), &source);
  SelectionMatrix sel{a.n, std::vector<std::uint8_t>(a.n, 1)};
  CHECK(mask_both_sides(sel, a, boolean_semiring()) == a);

  sel.diag[source] = 0;
  DenseSquareMatrix masked = mask_both_sides(sel, a, boolean_semiring());
  for (Vertex v = 0; v < a.n; ++v) {
    CHECK(masked.at(source, v) == 0);
    CHECK(masked.at(v, source) == 0);
  }
  // product route S A S gives the same matrix
  DenseSquareMatrix s_dense = to_dense(sel, boolean_semiring());
  CHECK(masked ==
        dense_multiply(s_dense,
                       dense_multiply(a, s_dense, boolean_semiring()),
                       boolean_semiring()));
}

TEST_CASE("the walk starts with the identity selection and the full matrix") {
  Vertex source;
  DenseSquareMatrix a = path5_dense(boolean_semiring(), &source);
  std::vector<SelectionStep> steps =
      selection_sequence(a, source, boolean_semiring());

  REQUIRE(steps.size() == 5);  // one per level of the length-4 path
  CHECK(steps[0].sel.diag == std::vector<std::uint8_t>(5, 1));
  CHECK(steps[0].a_masked == a);
  std::vector<Scalar> e(a.n, 0);
  e[source] = 1;
  CHECK(steps[0].x == e);

  // after one step the source's row and column are gone
  CHECK(steps[1].sel.diag[source] == 0);
  for (Vertex v = 0; v < a.n; ++v) {
    CHECK(steps[1].a_masked.at(source, v) == 0);
    CHECK(steps[1].a_masked.at(v, source) == 0);
    if (v != source) CHECK(steps[1].sel.diag[v] == 1);
  }
}

TEST_CASE("walk input validation") {
  DenseSquareMatrix big(65, 0);
  CHECK_THROWS_AS((void)selection_sequence(big, 0, boolean_semiring()),
                  std::invalid_argument);

  DenseSquareMatrix asym(3, 0);
  asym.at(0, 1) = 1;  // no mate
  CHECK_THROWS_AS((void)selection_sequence(asym, 0, boolean_semiring()),
                  std::invalid_argument);

  DenseSquareMatrix ok(3, 0);
  CHECK_THROWS_AS((void)selection_sequence(ok, 5, boolean_semiring()),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)verify_masked_power(ok, 0, boolean_semiring(), 0),
                  std::invalid_argument);
}

TEST_CASE("sequence walk never trips its internal assertions on random input") {
  RngEngine rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    Vertex n = 2 + static_cast<Vertex>(rng() % 24);
    EdgeList g = gnp_graph(n, 0.05 + 0.07 * (trial % 4), rng);
    Vertex source = static_cast<Vertex>(rng() % n);
    for (const char* name : {"boolean", "arithmetic", "tropical"}) {
      const Semiring& s = semiring_by_name(name);
      DenseSquareMatrix a = dense_from_edges(g, s);
      CHECK_NOTHROW((void)selection_sequence(a, source, s));
    }
  }
}

TEST_CASE("masked product equals the powered product on the path") {
  Vertex source;
  DenseSquareMatrix a = path5_dense(boolean_semiring(), &source);
  // step 3: the only vertex two hops out is internal 2; its unvisited
  // neighbor, internal 3 (input id 4), is the entire product support
  MaskedPowerReport rep = verify_masked_power(a, source, boolean_semiring(), 3);
  CHECK(rep.entrywise_equal);
  CHECK(rep.support_equal);
  CHECK(rep.intermediate_equal);
  CHECK(rep.lhs == std::vector<Scalar>{0, 0, 0, 1, 0});

  // far past the end of the walk everything is empty but still consistent
  MaskedPowerReport past =
      verify_masked_power(a, source, boolean_semiring(), 9);
  CHECK(past.entrywise_equal);
  for (Scalar v : past.lhs) CHECK(v == 0);
}

TEST_CASE("masked product identity across semirings and random graphs") {
  RngEngine rng(4321);
  for (int trial = 0; trial < 12; ++trial) {
    Vertex n = 3 + static_cast<Vertex>(rng() % 14);
    EdgeList g = connected_gnp_graph(n, 0.2, rng);
    Vertex source = static_cast<Vertex>(rng() % n);
    for (const char* name : {"boolean", "arithmetic", "tropical"}) {
      const Semiring& s = semiring_by_name(name);
      DenseSquareMatrix a = dense_from_edges(g, s);
      for (std::uint32_t k = 1; k <= 4; ++k) {
        MaskedPowerReport rep = verify_masked_power(a, source, s, k);
        CHECK(rep.support_equal);
        CHECK(rep.intermediate_equal);
        if (s.id == SemiringId::Boolean) CHECK(rep.entrywise_equal);
      }
    }
  }
}

TEST_CASE("walk frontiers line up with the masked kernel") {
  RngEngine rng(20);
  for (int trial = 0; trial < 10; ++trial) {
    Vertex n = 3 + static_cast<Vertex>(rng() % 20);
    EdgeList g = gnp_graph(n, 0.15, rng);
    Vertex source = static_cast<Vertex>(rng() % n);
    const Semiring& s = boolean_semiring();
    KernelRun kernel = bfs_submatrix(build_csr(g, s), source, s);
    std::vector<SelectionStep> steps =
        selection_sequence(dense_from_edges(g, s), source, s);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      for (Vertex v = 0; v < n; ++v) {
        bool fresh = steps[i].sel.diag[v] && !s.is_zero(steps[i].x[v]);
        CHECK(fresh == (kernel.output.levels[v] == i));
      }
    }
  }
}

TEST_CASE("identity suite passes and counts every claim") {
  IdentitySuiteResult result = run_identity_suite(1234, 25, 20);
  CHECK(result.all_passed());
  REQUIRE(result.checks.size() == 8);
  for (const IdentityCheck& c : result.checks) {
    CHECK(c.checked > 0);
    CHECK(c.failed == 0);
  }
  CHECK_THROWS_AS((void)run_identity_suite(1, 1, 33), std::invalid_argument);
}
