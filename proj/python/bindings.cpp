// Python bindings for the BFS kernels. The module stays deliberately thin:
// load or generate a graph, run a kernel, read back levels/parents/counts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flab/bfs_baselines.hpp"
#include "flab/bfs_oracle.hpp"
#include "flab/bfs_parallel.hpp"
#include "flab/bfs_submatrix.hpp"
#include "flab/gen.hpp"
#include "flab/ingest.hpp"
#include "flab/kernel_run.hpp"

namespace py = pybind11;
using namespace flab;

namespace {

// Graphs cross the boundary as an opaque handle holding the normalized edge
// list plus the id map, so python never sees CSR internals.
struct GraphHandle {
  ParsedGraph parsed;
  CsrMatrix csr(const Semiring& s) const { return build_csr(parsed.graph, s); }
};

GraphHandle load_text(const std::string& path, bool directed) {
  return GraphHandle{parse_snap(path, directed)};
}

GraphHandle load_cache(const std::string& path, bool directed) {
  GraphHandle h;
  EdgeList g = read_cache(path, directed);
  h.parsed.external_ids.resize(g.n);
  for (Vertex v = 0; v < g.n; ++v) h.parsed.external_ids[v] = v;
  h.parsed.graph = std::move(g);
  return h;
}

GraphHandle from_edges(Vertex n, const std::vector<Edge>& edges,
                       bool directed) {
  GraphHandle h;
  EdgeList g;
  g.n = n;
  g.directed = directed;
  g.edges = edges;
  g = normalize(std::move(g));
  h.parsed.external_ids.resize(g.n);
  for (Vertex v = 0; v < g.n; ++v) h.parsed.external_ids[v] = v;
  h.parsed.graph = std::move(g);
  return h;
}

GraphHandle random_gnp(Vertex n, double p, std::uint64_t seed, bool directed,
                       bool connected) {
  GraphHandle h;
  RngEngine rng(seed);
  EdgeList g = connected ? connected_gnp_graph(n, p, rng)
                         : gnp_graph(n, p, rng, directed);
  h.parsed.external_ids.resize(g.n);
  for (Vertex v = 0; v < g.n; ++v) h.parsed.external_ids[v] = v;
  h.parsed.graph = std::move(g);
  return h;
}

KernelRun run_variant(const GraphHandle& h, const std::string& algo,
                      Vertex source, const std::string& semiring,
                      unsigned workers) {
  const Semiring& s = semiring_by_name(semiring);
  CsrMatrix a = h.csr(s);
  if (algo == "parallel") return bfs_parallel(a, source, s, workers);
  switch (variant_by_name(algo)) {
    case Variant::SpMV: return bfs_spmv(a, source, s);
    case Variant::SpMSpV: return bfs_spmspv(a, source, s);
    case Variant::SpMmSpV: return bfs_spmmspv(a, source, s);
    case Variant::Submatrix: return bfs_submatrix(a, source, s);
    case Variant::SubmatrixAllNz: return bfs_submatrix_allnz(a, source, s);
    default: throw std::invalid_argument("unknown algorithm: " + algo);
  }
}

}  // namespace

PYBIND11_MODULE(_flab, m) {
  m.doc() = "algebraic BFS kernels over masked submatrices";
  m.attr("UNREACHED") = kUnreached;

  py::class_<GraphHandle>(m, "Graph")
      .def_property_readonly(
          "n", [](const GraphHandle& h) { return h.parsed.graph.n; })
      .def_property_readonly(
          "m", [](const GraphHandle& h) { return h.parsed.graph.edges.size(); })
      .def_property_readonly(
          "directed",
          [](const GraphHandle& h) { return h.parsed.graph.directed; })
      .def_property_readonly(
          "external_ids",
          [](const GraphHandle& h) { return h.parsed.external_ids; })
      .def("internal_id",
           [](const GraphHandle& h, std::uint64_t ext) {
             return h.parsed.internal_id(ext);
           },
           py::arg("external_id"))
      .def("edges",
           [](const GraphHandle& h) { return h.parsed.graph.edges; });

  m.def("load_text", &load_text, py::arg("path"), py::arg("directed") = false,
        "parse a whitespace edge-list text file");
  m.def("load_cache", &load_cache, py::arg("path"),
        py::arg("directed") = false, "read a binary edge cache");
  m.def("from_edges", &from_edges, py::arg("n"), py::arg("edges"),
        py::arg("directed") = false, "build a graph from (u, v) pairs");
  m.def("random_gnp", &random_gnp, py::arg("n"), py::arg("p"),
        py::arg("seed") = 1, py::arg("directed") = false,
        py::arg("connected") = false, "seeded G(n, p) sample");

  py::class_<BfsOutput>(m, "BfsResult")
      .def_readonly("levels", &BfsOutput::levels)
      .def_readonly("parents", &BfsOutput::parents)
      .def_readonly("frontier_sizes", &BfsOutput::frontier_sizes)
      .def_readonly("reached", &BfsOutput::reached);

  py::class_<KernelRun>(m, "KernelRun")
      .def_property_readonly(
          "levels", [](const KernelRun& r) { return r.output.levels; })
      .def_property_readonly(
          "parents", [](const KernelRun& r) { return r.output.parents; })
      .def_property_readonly(
          "frontier_sizes",
          [](const KernelRun& r) { return r.output.frontier_sizes; })
      .def_property_readonly(
          "reached", [](const KernelRun& r) { return r.output.reached; })
      .def_property_readonly(
          "semiring_evals",
          [](const KernelRun& r) { return r.ops.semiring_evals; })
      .def_property_readonly(
          "nonzeros_touched",
          [](const KernelRun& r) { return r.ops.nonzeros_touched; })
      .def_property_readonly("steps",
                             [](const KernelRun& r) { return r.ops.steps; })
      .def_property_readonly(
          "duplicates", [](const KernelRun& r) { return r.ops.duplicates; })
      .def_property_readonly("variant", [](const KernelRun& r) {
        return std::string(variant_name(r.variant));
      });

  m.def("bfs",
        [](const GraphHandle& h, Vertex source, const std::string& algo,
           const std::string& semiring, unsigned workers) {
          return run_variant(h, algo, source, semiring, workers);
        },
        py::arg("graph"), py::arg("source"), py::arg("algo") = "submatrix",
        py::arg("semiring") = "boolean", py::arg("workers") = 1,
        "run one BFS kernel and return levels, parents, and counts");

  m.def("bfs_levels",
        [](const GraphHandle& h, Vertex source) {
          CsrMatrix a = h.csr(boolean_semiring());
          return bfs_combinatorial(a, source);
        },
        py::arg("graph"), py::arg("source"),
        "plain queue-based BFS (the reference answer)");

  m.def("stats",
        [](const GraphHandle& h, Vertex source) {
          GraphStats st = graph_stats(h.parsed.graph, source);
          py::dict d;
          d["n"] = st.n;
          d["m"] = st.m;
          d["source"] = st.source;
          d["eccentricity_from_source"] = st.eccentricity_from_source;
          d["reached_from_source"] = st.reached_from_source;
          return d;
        },
        py::arg("graph"), py::arg("source") = 0);
}
