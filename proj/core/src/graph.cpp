#include "diamdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "diamdom/error.hpp"

namespace diamdom {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw ContractViolation("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

VertexSet::VertexSet(std::size_t universe_size, std::vector<Vertex> members)
    : universe_(universe_size), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= universe_) {
    throw ContractViolation("vertex " + std::to_string(members_.back()) +
                            " outside universe of size " + std::to_string(universe_));
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::mask() const {
  std::vector<bool> m(universe_, false);
  for (Vertex v : members_) m[v] = true;
  return m;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, GraphOptions options)
    : adjacency_(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ContractViolation("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") references a vertex >= n = " + std::to_string(n));
    }
    edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  if (n > 0 && n <= options.matrix_cap) {
    words_ = (n + 63) / 64;
    matrix_.assign(n * words_, 0);
    for (const Edge& e : edges_) {
      matrix_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      matrix_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  }
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        list.reserve(edges.size());
        for (auto [a, b] : edges) list.push_back(make_edge(a, b));
        return list;
      }()) {}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_.front().size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  if (words_ != 0) {
    return (matrix_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

VertexSet Graph::open_neighborhood(Vertex v) const {
  return VertexSet(vertex_count(), std::vector<Vertex>(adjacency_.at(v).begin(),
                                                       adjacency_.at(v).end()));
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  std::vector<Vertex> members(adjacency_.at(v).begin(), adjacency_.at(v).end());
  members.push_back(v);
  return VertexSet(vertex_count(), std::move(members));
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    auto dist = bfs_distances(g, v);
    std::vector<Vertex> members;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (dist[w] != kUnreachable) {
        members.push_back(w);
        seen[w] = true;
      }
    }
    out.emplace_back(g.vertex_count(), std::move(members));
  }
  return out;
}

Distance diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

Distance girth(const Graph& g) {
  // Shortest cycle through a BFS root r is found at the first non-tree edge
  // closing back; minimising over all roots gives the exact girth.
  std::size_t best = kUnreachable;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v >= g.vertex_count()) {
      throw ContractViolation("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<Vertex> to_host(s.begin(), s.end());
  std::vector<Vertex> local(g.vertex_count(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < to_host.size(); ++i) local[to_host[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != static_cast<Vertex>(-1) && local[e.v] != static_cast<Vertex>(-1)) {
      edges.push_back(make_edge(local[e.u], local[e.v]));
    }
  }
  return {Graph(to_host.size(), edges), std::move(to_host)};
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!s.contains(v)) keep.push_back(v);
  }
  return induced_subgraph(g, VertexSet(g.vertex_count(), std::move(keep)));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) edges.push_back({a, b});
    }
  }
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

bool is_stable_set(const Graph& g, const VertexSet& s) {
  auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (g.adjacent(m[i], m[j])) return false;
    }
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!g.adjacent(m[i], m[j])) return false;
    }
  }
  return true;
}

bool is_maximal_stable_set(const Graph& g, const VertexSet& s) {
  if (s.universe_size() != g.vertex_count() || !is_stable_set(g, s)) return false;
  auto in = s.mask();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w]; })) return false;
  }
  return true;
}

bool is_simplicial(const Graph& g, Vertex v) {
  return is_clique(g, g.open_neighborhood(v));
}

bool is_regular(const Graph& g) { return g.max_degree() == g.min_degree(); }

namespace graphs {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Graph(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ContractViolation("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= leaves; ++leaf) edges.push_back({0, leaf});
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = 0; y < b; ++y) edges.push_back({x, static_cast<Vertex>(a + y)});
  }
  return Graph(a + b, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(i + 5, (i + 2) % 5 + 5));
  }
  return Graph(10, edges);
}

}  // namespace graphs

}  // namespace diamdom
