#ifndef RAAG_GRAPH_IO_HPP_
#define RAAG_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct ParsedGraph {
  GraphPtr graph;
  std::vector<std::string> warnings;
};

// Edge-list text: one `u v` edge per line, a lone token declares a vertex,
// `#` starts a comment. Duplicate edges are dropped with a warning.
ParsedGraph parse_graph_text(std::string_view text);

// {"vertices": [...], "edges": [[u, v], ...]}; vertices may be omitted when
// every vertex appears in an edge.
ParsedGraph parse_graph_json(std::string_view text);

// Dispatches on the first non-blank character ('{' means JSON).
ParsedGraph parse_graph(std::string_view text);

// Throws std::filesystem::filesystem_error when the file cannot be read.
ParsedGraph load_graph(const std::filesystem::path& path);

// Built-in families: path:n, cycle:n, nmtree:n,m, spider:k, join:n,m,
// overlap:n,m.
GraphPtr make_family(std::string_view spec);

}  // namespace raag

#endif  // RAAG_GRAPH_IO_HPP_
