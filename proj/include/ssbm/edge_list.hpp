#ifndef SSBM_EDGE_LIST_HPP
#define SSBM_EDGE_LIST_HPP

#include "ssbm/sampler.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ssbm {

// Edge-list text format:
//   n=<count>
//   i,j,s        (0-based, i < j, s is 1 or -1, sorted by (i, j))
// Lines beginning with '#' are comments. LF line endings.

/// Writes the comment lines (each prefixed "# ") followed by the graph.
void write_edge_list(std::ostream& out, const SignedGraph& g,
                     const std::vector<std::string>& comments = {});

/// Parses an edge list; malformed input raises ValidationError naming the line.
SignedGraph read_edge_list(std::istream& in);

void save_edge_list(const std::string& path, const SignedGraph& g,
                    const std::vector<std::string>& comments = {});
SignedGraph load_edge_list(const std::string& path);

}  // namespace ssbm

#endif  // SSBM_EDGE_LIST_HPP
