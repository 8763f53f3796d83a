#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "flab/bfs_baselines.hpp"
#include "flab/bfs_oracle.hpp"
#include "flab/bfs_submatrix.hpp"
#include "flab/gen.hpp"
#include "flab/ingest.hpp"

using namespace flab;

namespace {
const std::string kDataDir = FLAB_TEST_DATA_DIR;

bool same_run(const KernelRun& a, const KernelRun& b) {
  return a.output == b.output && a.variant == b.variant &&
         a.ops.semiring_evals == b.ops.semiring_evals &&
         a.ops.nonzeros_touched == b.ops.nonzeros_touched &&
         a.ops.steps == b.ops.steps && a.ops.duplicates == b.ops.duplicates &&
         a.ops.frontier_sizes == b.ops.frontier_sizes;
}
}  // namespace

TEST_CASE("masked kernel walks the path for the minimum price") {
  ParsedGraph p = parse_snap(kDataDir + "/path5.txt");
  CsrMatrix a = build_csr(p.graph, boolean_semiring());
  KernelRun run = bfs_submatrix(a, p.internal_id(2), boolean_semiring());

  // one discovery per non-source vertex: 4 nonzeros, 8 evaluations
  CHECK(run.ops.semiring_evals == 8);
  CHECK(run.ops.nonzeros_touched == 4);
  CHECK(run.ops.steps == 5);
  CHECK(run.ops.frontier_sizes == std::vector<std::uint64_t>{1, 1, 1, 1, 1});
  CHECK(run.output.levels == std::vector<std::uint32_t>{4, 0, 2, 3, 1});
  CHECK(run.output.reached == 5);
  CHECK(run.variant == Variant::Submatrix);
}

TEST_CASE("masked kernel on the triangle") {
  EdgeList g = clique_graph(3);
  CsrMatrix a = build_csr(g, boolean_semiring());
  KernelRun run = bfs_submatrix(a, 0, boolean_semiring());
  CHECK(run.ops.semiring_evals == 4);  // 2 * (3 - 1)
  CHECK(run.ops.steps == 2);
  CHECK(run.ops.frontier_sizes == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("all-nonzeros variant touches each component edge once") {
  EdgeList g = clique_graph(3);
  CsrMatrix a = build_csr(g, boolean_semiring());
  KernelRun run = bfs_submatrix_allnz(a, 0, boolean_semiring());
  CHECK(run.ops.semiring_evals == 6);  // 2m
  CHECK(run.ops.nonzeros_touched == 3);
  CHECK(run.ops.steps == 2);
  CHECK(run.ops.frontier_sizes == std::vector<std::uint64_t>{1, 2});
  CHECK(run.output.levels == std::vector<std::uint32_t>{0, 1, 1});
  CHECK(run.variant == Variant::SubmatrixAllNz);

  ParsedGraph p = parse_snap(kDataDir + "/path5.txt");
  CsrMatrix path = build_csr(p.graph, boolean_semiring());
  KernelRun path_run =
      bfs_submatrix_allnz(path, p.internal_id(2), boolean_semiring());
  CHECK(path_run.ops.semiring_evals == 8);  // path has no cross edges
  CHECK(path_run.output.levels == std::vector<std::uint32_t>{4, 0, 2, 3, 1});
}

TEST_CASE("isolated source costs nothing") {
  EdgeList g;
  g.n = 3;
  g.edges = {{1, 2}};
  g = normalize(std::move(g));
  CsrMatrix a = build_csr(g, boolean_semiring());
  for (const KernelRun& run : {bfs_submatrix(a, 0, boolean_semiring()),
                               bfs_submatrix_allnz(a, 0, boolean_semiring()),
                               bfs_submatrix_generic(a, 0, boolean_semiring())}) {
    CHECK(run.ops.semiring_evals == 0);
    CHECK(run.ops.steps == 1);
    CHECK(run.ops.frontier_sizes == std::vector<std::uint64_t>{1});
    CHECK(run.output.reached == 1);
  }
  CHECK_THROWS_AS((void)bfs_submatrix(a, 3, boolean_semiring()),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)bfs_submatrix_allnz(a, 3, boolean_semiring()),
                  std::invalid_argument);
}

TEST_CASE("discovery cost is exactly 2(reached - 1) on any undirected graph") {
  RngEngine rng(1001);
  for (int trial = 0; trial < 120; ++trial) {
    Vertex n = 2 + static_cast<Vertex>(rng() % 80);
    double density = 0.02 + 0.05 * (trial % 6);
    EdgeList g = trial % 2 ? connected_gnp_graph(n, density, rng)
                           : gnp_graph(n, density, rng);
    CsrMatrix a = build_csr(g, boolean_semiring());
    Vertex source = static_cast<Vertex>(rng() % n);
    KernelRun run = bfs_submatrix(a, source, boolean_semiring());
    CHECK(run.ops.semiring_evals == 2 * (run.output.reached - 1));
    CHECK(run.ops.nonzeros_touched == run.output.reached - 1);
  }
}

TEST_CASE("all-nonzeros cost equals twice the reached component's edges") {
  RngEngine rng(1002);
  for (int trial = 0; trial < 60; ++trial) {
    Vertex n = 2 + static_cast<Vertex>(rng() % 60);
    EdgeList g = gnp_graph(n, 0.02 + 0.05 * (trial % 6), rng);
    CsrMatrix a = build_csr(g, boolean_semiring());
    Vertex source = static_cast<Vertex>(rng() % n);
    KernelRun run = bfs_submatrix_allnz(a, source, boolean_semiring());

    // count edges with both endpoints reached
    std::uint64_t m_comp = 0;
    BfsOutput oracle = bfs_combinatorial(a, source);
    for (auto [u, v] : g.edges)
      if (oracle.levels[u] != kUnreached && oracle.levels[v] != kUnreached)
        ++m_comp;
    CHECK(run.ops.semiring_evals == 2 * m_comp);

    // bracket: masked cost <= all-nonzeros cost <= full matrix
    KernelRun masked = bfs_submatrix(a, source, boolean_semiring());
    CHECK(masked.ops.semiring_evals <= run.ops.semiring_evals);
    CHECK(run.ops.semiring_evals <= 2 * a.nnz());
    CHECK(run.output.levels == masked.output.levels);
    CHECK(run.output.frontier_sizes == masked.output.frontier_sizes);
  }
}

TEST_CASE("abstract-column route is bit-identical to the CSR route") {
  RngEngine rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Vertex n = 2 + static_cast<Vertex>(rng() % 50);
    bool directed = trial % 4 == 0;
    EdgeList g = gnp_graph(n, 0.02 + 0.06 * (trial % 5), rng, directed);
    Vertex source = static_cast<Vertex>(rng() % n);
    for (const char* name : {"boolean", "arithmetic", "tropical"}) {
      const Semiring& s = semiring_by_name(name);
      CsrMatrix a = build_csr(g, s);
      CHECK(same_run(bfs_submatrix(a, source, s),
                     bfs_submatrix_generic(a, source, s)));
    }
  }
}

TEST_CASE("masked kernels agree with the oracle everywhere") {
  RngEngine rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    Vertex n = 2 + static_cast<Vertex>(rng() % 64);
    bool directed = trial % 2 == 1;
    EdgeList g = gnp_graph(n, 0.08, rng, directed);
    CsrMatrix a = build_csr(g, boolean_semiring());
    Vertex source = static_cast<Vertex>(rng() % n);
    BfsOutput expect = bfs_combinatorial(a, source);
    for (const KernelRun& run :
         {bfs_submatrix(a, source, boolean_semiring()),
          bfs_submatrix_allnz(a, source, boolean_semiring())}) {
      CHECK(run.output.levels == expect.levels);
      CHECK(run.output.frontier_sizes == expect.frontier_sizes);
      CHECK(run.output.reached == expect.reached);
      CHECK(run.ops.steps == run.ops.frontier_sizes.size());
    }
  }
}

TEST_CASE("levels and counts do not depend on the semiring") {
  RngEngine rng(9);
  EdgeList g = connected_gnp_graph(50, 0.08, rng);
  KernelRun reference =
      bfs_submatrix(build_csr(g, boolean_semiring()), 3, boolean_semiring());
  for (const char* name : {"arithmetic", "tropical"}) {
    const Semiring& s = semiring_by_name(name);
    KernelRun run = bfs_submatrix(build_csr(g, s), 3, s);
    CHECK(run.output == reference.output);
    CHECK(run.ops.semiring_evals == reference.ops.semiring_evals);
  }
}

TEST_CASE("trace shows each column projected once, each edge one-way") {
  RngEngine rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    Vertex n = 2 + static_cast<Vertex>(rng() % 48);
    EdgeList g = gnp_graph(n, 0.02 + 0.06 * (trial % 5), rng);
    CsrMatrix a = build_csr(g, boolean_semiring());
    Vertex source = static_cast<Vertex>(rng() % n);

    SubmatrixTrace trace;
    KernelRun run = bfs_submatrix(a, source, boolean_semiring(), &trace);

    std::set<Vertex> seen_columns;
    for (Vertex j : trace.projected_columns) {
      CHECK(seen_columns.insert(j).second);  // never projected twice
      CHECK(run.output.levels[j] != kUnreached);
    }
    CHECK(seen_columns.size() == run.output.reached);

    std::set<Edge> touched(trace.touched.begin(), trace.touched.end());
    CHECK(touched.size() == trace.touched.size());
    for (auto [i, j] : trace.touched) {
      CHECK(!touched.count({j, i}));  // the mate was masked away
      CHECK(run.output.parents[i] == j);
      CHECK(run.output.levels[i] == run.output.levels[j] + 1);
    }
    CHECK(trace.touched.size() == run.ops.nonzeros_touched);
  }
}
