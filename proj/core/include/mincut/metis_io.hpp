#pragma once

#include <iosfwd>
#include <string>

#include "mincut/graph.hpp"

namespace mincut {

/// Parse a graph in METIS format: header "n m [fmt]", then one 1-indexed
/// adjacency line per vertex; fmt 0 (or absent) is unweighted, fmt 1 carries
/// interleaved (neighbor, weight) pairs. '%' lines are comments. Asymmetric
/// adjacency, bad indices, and entry-count mismatches are rejected with the
/// offending line number (GraphFormatError).
Graph parse_metis(std::istream& in);

Graph parse_metis(const std::string& text);

/// Read from a file; names ending in ".gz" are transparently decompressed.
Graph read_metis_file(const std::string& path);

/// Serialize with fmt=1 always; parse_metis(write_metis(g)) == g.
std::string write_metis(const Graph& g);

void write_metis_file(const Graph& g, const std::string& path);

}  // namespace mincut
