#pragma once

#include <iosfwd>
#include <string>

#include "flab/graph.hpp"

namespace flab {

// Edge-list text ingestion (the SNAP layout): '#' starts a comment line,
// every other non-blank line is two whitespace-separated vertex ids. External
// ids are arbitrary u64 values; they are remapped to 0..n-1 in ascending
// numeric order. Self loops and duplicate edges are dropped, and ids that
// only ever appear in self loops do not exist in the result.

struct ParsedGraph {
  EdgeList graph;
  // external_ids[internal] = original id, ascending by construction.
  std::vector<std::uint64_t> external_ids;

  // Maps an original id back to its internal index; throws
  // std::invalid_argument when the id never appeared.
  Vertex internal_id(std::uint64_t external) const;
};

// Throws std::runtime_error naming the 1-based line number on malformed
// input, and for a path that cannot be opened.
ParsedGraph parse_snap(const std::string& path, bool directed = false);
ParsedGraph parse_snap_stream(std::istream& in, bool directed,
                              const std::string& origin);

std::string write_snap_text(const EdgeList& g);

// Whole-graph summary derived from one traversal.
struct GraphStats {
  Vertex n = 0;
  std::uint64_t m = 0;  // normalized edge count (arcs when directed)
  Vertex source = 0;
  std::uint32_t eccentricity_from_source = 0;  // max level among reached
  std::uint64_t reached_from_source = 0;
};

GraphStats graph_stats(const EdgeList& g, Vertex source);

// Binary edge-list cache: magic "FLAB1", little-endian u64 n, u64 m, then m
// little-endian u32 pairs of normalized (internal-id) endpoints. Direction
// is not recorded; the reader is told, like the text parser is.
void write_cache(const std::string& path, const EdgeList& g);
EdgeList read_cache(const std::string& path, bool directed);

// Double-sweep heuristic: hop to the farthest vertex found, repeat. Returns
// a far vertex and its eccentricity; the eccentricity is a lower bound on
// the graph's diameter. Useful for hunting full-diameter sources.
std::pair<Vertex, std::uint32_t> find_far_source(const CsrMatrix& a,
                                                 Vertex start, int sweeps);

}  // namespace flab
