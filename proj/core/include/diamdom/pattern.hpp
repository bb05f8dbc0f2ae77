#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "diamdom/graph.hpp"

namespace diamdom {

enum class PatternName {
  claw,
  k14,
  two_k2,
  c3,
  c4,
  c5,
  c6,
  p4,
  // The nine minimal non-line graphs (Beineke). f1 is the claw.
  f1,
  f2,
  f3,
  f4,
  f5,
  f6,
  f7,
  f8,
  f9,
};

struct Pattern {
  PatternName name;
  Graph graph;
};

std::string_view to_string(PatternName name);
std::optional<PatternName> pattern_from_string(std::string_view text);

/// Shared, immutable pattern instance.
const Pattern& pattern(PatternName name);

/// f1..f9 in order.
std::span<const PatternName> line_graph_obstructions();

/// Injective map: pattern vertex i -> host vertex occurrence[i].
using Occurrence = std::vector<Vertex>;

struct PatternSearchOptions {
  std::size_t max_pattern_vertices = 8;
};

/// Exhaustive backtracking search for `p` as an induced subgraph of `g`.
///
/// Pattern vertices are placed by decreasing degree (ties by id) and host
/// candidates are tried in ascending id, so the returned witness is the
/// lexicographically first one in that order. Throws UnsupportedPattern when
/// the pattern has more vertices than `options.max_pattern_vertices`.
std::optional<Occurrence> contains_induced(const Graph& g, const Pattern& p,
                                           PatternSearchOptions options = {});
std::optional<Occurrence> contains_induced(const Graph& g, PatternName name);

/// True iff `occurrence` is injective and realizes `p` as an induced subgraph of `g`.
bool is_induced_occurrence(const Graph& g, const Pattern& p, std::span<const Vertex> occurrence);

}  // namespace diamdom
