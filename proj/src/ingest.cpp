#include "flab/ingest.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "flab/bfs_oracle.hpp"

namespace flab {
namespace {

constexpr char kCacheMagic[5] = {'F', 'L', 'A', 'B', '1'};

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line_no,
                             const std::string& what) {
  throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " +
                           what);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

Vertex ParsedGraph::internal_id(std::uint64_t external) const {
  auto it = std::lower_bound(external_ids.begin(), external_ids.end(), external);
  if (it == external_ids.end() || *it != external)
    throw std::invalid_argument("unknown vertex id " + std::to_string(external));
  return static_cast<Vertex>(it - external_ids.begin());
}

ParsedGraph parse_snap_stream(std::istream& in, bool directed,
                              const std::string& origin) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;   // blank
    if (line[first] == '#') continue;           // comment
    // Stream extraction into unsigned would wrap "-1" around; reject it.
    if (line.find('-') != std::string::npos)
      parse_fail(origin, line_no, "vertex ids must be non-negative");
    std::istringstream fields(line);
    std::uint64_t u = 0, v = 0;
    if (!(fields >> u >> v))
      parse_fail(origin, line_no, "expected two vertex ids");
    std::string extra;
    if (fields >> extra)
      parse_fail(origin, line_no, "trailing field '" + extra + "'");
    if (u == v) continue;  // self loop; the endpoint id is not recorded
    raw.emplace_back(u, v);
  }

  // Ascending-id remap over the surviving endpoints.
  std::vector<std::uint64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  ParsedGraph parsed;
  parsed.external_ids = std::move(ids);
  parsed.graph.n = static_cast<Vertex>(parsed.external_ids.size());
  parsed.graph.directed = directed;
  parsed.graph.edges.reserve(raw.size());
  auto lookup = [&](std::uint64_t id) {
    return static_cast<Vertex>(
        std::lower_bound(parsed.external_ids.begin(), parsed.external_ids.end(),
                         id) -
        parsed.external_ids.begin());
  };
  for (const auto& [u, v] : raw)
    parsed.graph.edges.emplace_back(lookup(u), lookup(v));
  parsed.graph = normalize(std::move(parsed.graph));
  return parsed;
}

ParsedGraph parse_snap(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_snap_stream(in, directed, path);
}

std::string write_snap_text(const EdgeList& g) {
  std::ostringstream out;
  out << "# " << (g.directed ? "directed" : "undirected") << " graph, " << g.n
      << " vertices, " << g.edges.size() << " edges\n";
  for (const Edge& e : g.edges) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

GraphStats graph_stats(const EdgeList& g, Vertex source) {
  CsrMatrix a = build_csr(g, boolean_semiring());
  BfsOutput bfs = bfs_combinatorial(a, source);
  GraphStats st;
  st.n = g.n;
  st.m = g.edges.size();
  st.source = source;
  st.eccentricity_from_source =
      static_cast<std::uint32_t>(bfs.frontier_sizes.size() - 1);
  st.reached_from_source = bfs.reached;
  return st;
}

void write_cache(const std::string& path, const EdgeList& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(kCacheMagic, sizeof kCacheMagic);
  put_u64(out, g.n);
  put_u64(out, g.edges.size());
  for (const Edge& e : g.edges) {
    put_u32(out, e.first);
    put_u32(out, e.second);
  }
  if (!out) throw std::runtime_error("short write to " + path);
}

EdgeList read_cache(const std::string& path, bool directed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[5];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kCacheMagic, sizeof magic) != 0)
    throw std::runtime_error(path + ": not a FLAB1 cache");
  EdgeList g;
  g.directed = directed;
  g.n = static_cast<Vertex>(get_u64(in));
  std::uint64_t m = get_u64(in);
  if (!in) throw std::runtime_error(path + ": truncated cache");
  for (std::uint64_t i = 0; i < m; ++i) {
    Vertex u = get_u32(in);
    Vertex v = get_u32(in);
    if (!in) throw std::runtime_error(path + ": truncated cache");
    g.edges.emplace_back(u, v);
  }
  return normalize(std::move(g));
}

std::pair<Vertex, std::uint32_t> find_far_source(const CsrMatrix& a,
                                                 Vertex start, int sweeps) {
  Vertex best = start;
  std::uint32_t best_ecc = 0;
  Vertex probe = start;
  for (int i = 0; i < sweeps; ++i) {
    BfsOutput bfs = bfs_combinatorial(a, probe);
    std::uint32_t ecc = static_cast<std::uint32_t>(bfs.frontier_sizes.size() - 1);
    if (ecc > best_ecc) {
      best_ecc = ecc;
      best = probe;
    }
    // Farthest vertex discovered; ties resolve to the lowest index.
    Vertex far = probe;
    for (Vertex v = 0; v < a.n_rows; ++v)
      if (bfs.levels[v] != kUnreached && bfs.levels[v] == ecc) {
        far = v;
        break;
      }
    if (far == probe) break;
    probe = far;
  }
  return {best, best_ecc};
}

}  // namespace flab
