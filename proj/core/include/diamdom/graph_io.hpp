#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "diamdom/graph.hpp"

namespace diamdom {

enum class GraphFormat {
  /// First line "n m", then m lines "u v" with 0-based ids.
  edge_list,
  /// "p edge n m" header, "e u v" lines with 1-based ids, "c" comments.
  dimacs,
};

/// Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::edge_list);

/// Throws ParseError when the file cannot be opened (line 0) or parsed.
Graph read_graph_file(const std::filesystem::path& path,
                      GraphFormat format = GraphFormat::edge_list);

/// Canonical edge_list text: "n m" then edges sorted lexicographically.
std::string to_edge_list(const Graph& g);
std::string to_dimacs(const Graph& g);

}  // namespace diamdom
