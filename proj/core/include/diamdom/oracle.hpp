#pragma once

#include <cstddef>
#include <vector>

#include "diamdom/graph.hpp"

// Brute-force reference answers for property tests and reduction checks.
// Nothing here calls into the solvers it is meant to check.

namespace diamdom::oracle {

/// Vertex-count guards. The environment variable DOMSET_ORACLE_LIMIT, when
/// set to a positive integer (at most 63), replaces every default.
struct Guards {
  std::size_t gamma = 24;
  std::size_t alpha = 24;
  std::size_t vertex_cover = 24;
  std::size_t mis = 16;
  /// Matching oracles enumerate every matching, which grows like n!! on dense graphs.
  std::size_t matching = 14;
};

Guards guards();

/// Each function throws ResourceLimit (count = vertex count) above its guard.
std::size_t gamma_oracle(const Graph& g);
std::size_t mmm_oracle(const Graph& g);
std::size_t max_matching_oracle(const Graph& g);
std::size_t alpha_oracle(const Graph& g);
std::size_t vertex_cover_oracle(const Graph& g);
/// Every maximal stable set, sorted.
std::vector<VertexSet> mis_oracle(const Graph& g);

}  // namespace diamdom::oracle
