#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diamdom/graph.hpp"

namespace diamdom {

/// Set of pairwise vertex-disjoint edges over a host with `host_n` vertices.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t host_n) : host_n_(host_n) {}
  /// Sorts the edges. Throws ContractViolation if two edges share an endpoint
  /// or an endpoint is >= host_n.
  Matching(std::size_t host_n, std::vector<Edge> edges);

  std::size_t host_n() const noexcept { return host_n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool covers(Vertex v) const;
  std::optional<Vertex> mate(Vertex v) const;
  /// Vertices touched by the matching, ascending.
  VertexSet covered() const;

  /// Union of two disjoint matchings on the same host.
  Matching merged(const Matching& other) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::size_t host_n_ = 0;
  std::vector<Edge> edges_;
};

/// Total order used to pick a deterministic best matching: size, then edges.
bool smaller_matching(const Matching& a, const Matching& b);

/// Every edge of `m` is an edge of `g` (disjointness is a Matching invariant).
bool is_valid_matching(const Graph& g, const Matching& m);

/// True iff every edge of `g` has an endpoint covered by `m`.
bool is_maximal_matching(const Graph& g, const Matching& m);

/// Bipartite graph between two disjoint vertex sets of a common host.
struct BipartiteView {
  VertexSet left;
  VertexSet right;
  /// (left vertex, right vertex) pairs, sorted.
  std::vector<std::pair<Vertex, Vertex>> links;

  /// Takes every edge of `g` between `left` and `right`. Both sides must be
  /// disjoint stable sets of `g`.
  static BipartiteView from_graph(const Graph& g, VertexSet left, VertexSet right);
  /// Explicit links; validates disjoint sides and that links go left to right.
  static BipartiteView from_links(VertexSet left, VertexSet right,
                                  std::vector<std::pair<Vertex, Vertex>> links);
};

/// Maximum-cardinality matching by Edmonds' blossom algorithm, O(n^3).
///
/// Free vertices are rooted in ascending id and neighbors are scanned in
/// ascending id, so the result is a fixed function of the input graph.
Matching maximum_matching(const Graph& g);

struct BipartiteMatching {
  Matching matching;
  /// |matching| == |left|.
  bool covers_left = false;
};

/// Maximum matching by augmenting paths from left vertices in ascending id.
BipartiteMatching bipartite_max_matching(const BipartiteView& b);

struct HallViolator {
  /// T': left vertices reachable by alternating paths from unmatched left vertices.
  VertexSet deficient;
  /// N(T') on the right side; always smaller than `deficient`.
  VertexSet neighborhood;
};

/// Deficiency set certifying that no matching covers the left side, or
/// nullopt when `m` already covers it. Throws ContractViolation if `m` is not
/// a maximum matching of `b` (an augmenting path exists).
std::optional<HallViolator> hall_violator(const BipartiteView& b, const Matching& m);

}  // namespace diamdom
