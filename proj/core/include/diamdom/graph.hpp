#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace diamdom {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes the endpoint order. Throws ContractViolation on a loop.
Edge make_edge(Vertex a, Vertex b);

/// Sorted, duplicate-free subset of 0..universe_size-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe_size) : universe_(universe_size) {}
  /// Sorts and deduplicates `members`. Throws ContractViolation if any id is out of range.
  VertexSet(std::size_t universe_size, std::vector<Vertex> members);
  VertexSet(std::size_t universe_size, std::initializer_list<Vertex> members)
      : VertexSet(universe_size, std::vector<Vertex>(members)) {}

  std::size_t universe_size() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Indicator vector of length universe_size().
  std::vector<bool> mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
};

struct GraphOptions {
  /// Graphs with more vertices than this skip the adjacency bitmatrix.
  std::size_t matrix_cap = 4096;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Keeps sorted neighbor lists, the canonical (lexicographically sorted) edge
/// list, and for graphs up to GraphOptions::matrix_cap an adjacency bitmatrix
/// used for O(1) `adjacent` queries. Duplicate edges in the input collapse.
class Graph {
 public:
  Graph() = default;
  /// Throws ContractViolation on loops or ids >= n.
  Graph(std::size_t n, std::span<const Edge> edges, GraphOptions options = {});
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  explicit Graph(std::size_t n) : Graph(n, std::span<const Edge>{}) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  bool adjacent(Vertex a, Vertex b) const;
  bool has_matrix() const noexcept { return words_ != 0; }

  /// Open neighborhood N(v) as a VertexSet.
  VertexSet open_neighborhood(Vertex v) const;
  /// Closed neighborhood N[v].
  VertexSet closed_neighborhood(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> matrix_;
  std::size_t words_ = 0;
};

/// Distances are `std::nullopt` when infinite.
using Distance = std::optional<std::size_t>;

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// BFS distances from `source`; kUnreachable for vertices in other components.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

/// Largest shortest-path distance; nullopt when disconnected, 0 for n <= 1.
Distance diameter(const Graph& g);
/// Length of a shortest cycle; nullopt for forests.
Distance girth(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// Host id of each vertex of `graph`.
  std::vector<Vertex> to_host;
};

/// G[S], vertices renumbered in ascending host order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
/// G - S.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
/// Disjoint union, vertices of `b` shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_stable_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
/// Stable and no outside vertex can be added.
bool is_maximal_stable_set(const Graph& g, const VertexSet& s);
bool is_simplicial(const Graph& g, Vertex v);
bool is_regular(const Graph& g);

namespace graphs {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();

}  // namespace graphs

}  // namespace diamdom
