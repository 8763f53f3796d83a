#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "flab/bfs_oracle.hpp"
#include "flab/gen.hpp"
#include "flab/ingest.hpp"

using namespace flab;

namespace {
const std::string kDataDir = FLAB_TEST_DATA_DIR;

// all-pairs hop distances by min-plus closure; the slow reference
std::vector<std::vector<std::uint64_t>> apsp(const EdgeList& g) {
  const std::uint64_t inf = UINT64_MAX / 2;
  std::vector<std::vector<std::uint64_t>> d(g.n,
                                            std::vector<std::uint64_t>(g.n, inf));
  for (Vertex v = 0; v < g.n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges) {
    d[u][v] = 1;
    if (!g.directed) d[v][u] = 1;
  }
  for (Vertex k = 0; k < g.n; ++k)
    for (Vertex i = 0; i < g.n; ++i)
      for (Vertex j = 0; j < g.n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}
}  // namespace

TEST_CASE("queue BFS on the five-vertex path") {
  ParsedGraph p = parse_snap(kDataDir + "/path5.txt");
  CsrMatrix a = build_csr(p.graph, boolean_semiring());
  BfsOutput out = bfs_combinatorial(a, p.internal_id(2));

  CHECK(out.levels == std::vector<std::uint32_t>{4, 0, 2, 3, 1});
  CHECK(out.frontier_sizes == std::vector<std::uint64_t>{1, 1, 1, 1, 1});
  CHECK(out.reached == 5);
  // parent chain follows the path; n marks the source's missing parent
  CHECK(out.parents == std::vector<Vertex>{3, 5, 4, 2, 1});
}

TEST_CASE("an isolated source reaches only itself") {
  EdgeList g;
  g.n = 3;
  g.edges = {{1, 2}};
  g = normalize(std::move(g));
  CsrMatrix a = build_csr(g, boolean_semiring());
  BfsOutput out = bfs_combinatorial(a, 0);
  CHECK(out.levels == std::vector<std::uint32_t>{0, kUnreached, kUnreached});
  CHECK(out.frontier_sizes == std::vector<std::uint64_t>{1});
  CHECK(out.reached == 1);
  CHECK(out.parents[0] == 3);
}

TEST_CASE("source validation") {
  EdgeList g;
  g.n = 2;
  g.edges = {{0, 1}};
  g = normalize(std::move(g));
  CsrMatrix a = build_csr(g, boolean_semiring());
  CHECK_THROWS_AS((void)bfs_combinatorial(a, 2), std::invalid_argument);
}

TEST_CASE("levels agree with all-pairs distances on random graphs") {
  RngEngine rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    Vertex n = 2 + static_cast<Vertex>(rng() % 30);
    double p = (trial % 5 + 1) * 0.08;
    bool directed = trial % 3 == 0;
    EdgeList g = gnp_graph(n, p, rng, directed);
    CsrMatrix a = build_csr(g, boolean_semiring());
    auto dist = apsp(g);
    Vertex source = static_cast<Vertex>(rng() % n);
    BfsOutput out = bfs_combinatorial(a, source);

    std::uint64_t reached = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (dist[source][v] >= UINT64_MAX / 2) {
        CHECK(out.levels[v] == kUnreached);
      } else {
        CHECK(out.levels[v] == dist[source][v]);
        ++reached;
      }
    }
    CHECK(out.reached == reached);
    CHECK(std::accumulate(out.frontier_sizes.begin(), out.frontier_sizes.end(),
                          std::uint64_t{0}) == reached);

    // every non-source reached vertex has a reached parent one level closer
    for (Vertex v = 0; v < n; ++v) {
      if (v == source || out.levels[v] == kUnreached) continue;
      Vertex pa = out.parents[v];
      REQUIRE(pa < n);
      CHECK(out.levels[pa] + 1 == out.levels[v]);
    }
  }
}

TEST_CASE("frontier sizes count vertices per level") {
  RngEngine rng(7);
  EdgeList g = connected_gnp_graph(40, 0.1, rng);
  CsrMatrix a = build_csr(g, boolean_semiring());
  BfsOutput out = bfs_combinatorial(a, 5);
  std::vector<std::uint64_t> by_level(out.frontier_sizes.size(), 0);
  for (Vertex v = 0; v < g.n; ++v) {
    REQUIRE(out.levels[v] < by_level.size());  // connected: everyone reached
    by_level[out.levels[v]] += 1;
  }
  CHECK(by_level == out.frontier_sizes);
  CHECK(out.frontier_sizes[0] == 1);
}
