#include "diamdom/matching.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "diamdom/error.hpp"

namespace diamdom {

namespace {
constexpr Vertex kFree = static_cast<Vertex>(-1);
}

Matching::Matching(std::size_t host_n, std::vector<Edge> edges)
    : host_n_(host_n), edges_(std::move(edges)) {
  std::vector<bool> seen(host_n, false);
  for (Edge& e : edges_) {
    e = make_edge(e.u, e.v);
    if (e.v >= host_n) {
      throw ContractViolation("matching edge endpoint " + std::to_string(e.v) +
                              " outside host of size " + std::to_string(host_n));
    }
    if (seen[e.u] || seen[e.v]) {
      throw ContractViolation("matching edges share an endpoint");
    }
    seen[e.u] = seen[e.v] = true;
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Matching::covers(Vertex v) const { return mate(v).has_value(); }

std::optional<Vertex> Matching::mate(Vertex v) const {
  for (const Edge& e : edges_) {
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
  }
  return std::nullopt;
}

VertexSet Matching::covered() const {
  std::vector<Vertex> members;
  for (const Edge& e : edges_) {
    members.push_back(e.u);
    members.push_back(e.v);
  }
  return VertexSet(host_n_, std::move(members));
}

Matching Matching::merged(const Matching& other) const {
  if (other.host_n_ != host_n_) throw ContractViolation("merging matchings of different hosts");
  std::vector<Edge> all = edges_;
  all.insert(all.end(), other.edges_.begin(), other.edges_.end());
  return Matching(host_n_, std::move(all));
}

bool smaller_matching(const Matching& a, const Matching& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.edges() < b.edges();
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  if (m.host_n() != g.vertex_count()) return false;
  return std::all_of(m.edges().begin(), m.edges().end(),
                     [&](const Edge& e) { return g.adjacent(e.u, e.v); });
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
  auto covered = m.covered().mask();
  covered.resize(g.vertex_count(), false);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return covered[e.u] || covered[e.v]; });
}

BipartiteView BipartiteView::from_graph(const Graph& g, VertexSet left, VertexSet right) {
  if (!is_stable_set(g, left) || !is_stable_set(g, right)) {
    throw ContractViolation("bipartite sides must be stable sets of the host");
  }
  std::vector<std::pair<Vertex, Vertex>> links;
  for (Vertex t : left) {
    if (t >= g.vertex_count()) throw ContractViolation("bipartite side outside host");
    for (Vertex s : g.neighbors(t)) {
      if (right.contains(s)) links.emplace_back(t, s);
    }
  }
  return from_links(std::move(left), std::move(right), std::move(links));
}

BipartiteView BipartiteView::from_links(VertexSet left, VertexSet right,
                                        std::vector<std::pair<Vertex, Vertex>> links) {
  for (Vertex v : left) {
    if (right.contains(v)) throw ContractViolation("bipartite sides overlap");
  }
  for (auto [t, s] : links) {
    if (!left.contains(t) || !right.contains(s)) {
      throw ContractViolation("bipartite link does not go from left to right");
    }
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  return BipartiteView{std::move(left), std::move(right), std::move(links)};
}

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, kFree),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_),
        seen_lca_(n_) {}

  Matching run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != kFree) continue;
      Vertex end = find_augmenting_path(root);
      while (end != kFree) {
        Vertex prev = parent_[end];
        Vertex next = match_[prev];
        match_[end] = prev;
        match_[prev] = end;
        end = next;
      }
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kFree && v < match_[v]) edges.push_back({v, match_[v]});
    }
    return Matching(n_, std::move(edges));
  }

 private:
  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::fill(seen_lca_.begin(), seen_lca_.end(), false);
    while (true) {
      a = base_[a];
      seen_lca_[a] = true;
      if (match_[a] == kFree) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen_lca_[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kFree);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kFree && parent_[match_[to]] != kFree)) {
          Vertex b = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kFree) {
          parent_[to] = v;
          if (match_[to] == kFree) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kFree;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
  std::vector<bool> seen_lca_;
};

struct BipartiteIndex {
  std::size_t universe = 0;
  std::vector<std::vector<Vertex>> right_of;  // indexed by host id of left vertex
};

BipartiteIndex index_links(const BipartiteView& b) {
  BipartiteIndex idx;
  idx.universe = std::max(b.left.universe_size(), b.right.universe_size());
  for (Vertex v : b.left) idx.universe = std::max<std::size_t>(idx.universe, v + 1);
  for (Vertex v : b.right) idx.universe = std::max<std::size_t>(idx.universe, v + 1);
  idx.right_of.resize(idx.universe);
  for (auto [t, s] : b.links) idx.right_of[t].push_back(s);
  return idx;
}

bool augment(const BipartiteIndex& idx, Vertex t, std::vector<Vertex>& mate_of_right,
             std::vector<Vertex>& mate_of_left, std::vector<bool>& visited) {
  for (Vertex s : idx.right_of[t]) {
    if (visited[s]) continue;
    visited[s] = true;
    if (mate_of_right[s] == kFree ||
        augment(idx, mate_of_right[s], mate_of_right, mate_of_left, visited)) {
      mate_of_right[s] = t;
      mate_of_left[t] = s;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

BipartiteMatching bipartite_max_matching(const BipartiteView& b) {
  auto idx = index_links(b);
  std::vector<Vertex> mate_of_right(idx.universe, kFree);
  std::vector<Vertex> mate_of_left(idx.universe, kFree);
  for (Vertex t : b.left) {
    std::vector<bool> visited(idx.universe, false);
    augment(idx, t, mate_of_right, mate_of_left, visited);
  }
  std::vector<Edge> edges;
  for (Vertex t : b.left) {
    if (mate_of_left[t] != kFree) edges.push_back(make_edge(t, mate_of_left[t]));
  }
  BipartiteMatching out{Matching(idx.universe, std::move(edges)), false};
  out.covers_left = out.matching.size() == b.left.size();
  return out;
}

std::optional<HallViolator> hall_violator(const BipartiteView& b, const Matching& m) {
  auto idx = index_links(b);
  std::vector<Vertex> mate(idx.universe, kFree);
  for (const Edge& e : m.edges()) {
    Vertex t = b.left.contains(e.u) ? e.u : e.v;
    Vertex s = t == e.u ? e.v : e.u;
    if (!b.left.contains(t) || !b.right.contains(s) ||
        !std::binary_search(b.links.begin(), b.links.end(), std::make_pair(t, s))) {
      throw ContractViolation("matching edge is not a link of the bipartite view");
    }
    mate[t] = s;
    mate[s] = t;
  }

  // Alternating BFS from every unmatched left vertex: left -> any link,
  // right -> its mate. Reaching an unmatched right vertex is an augmenting path.
  std::vector<bool> reached(idx.universe, false);
  std::deque<Vertex> queue;
  for (Vertex t : b.left) {
    if (mate[t] == kFree) {
      reached[t] = true;
      queue.push_back(t);
    }
  }
  if (queue.empty()) return std::nullopt;
  std::vector<Vertex> deficient;
  std::vector<Vertex> neighborhood;
  while (!queue.empty()) {
    Vertex t = queue.front();
    queue.pop_front();
    deficient.push_back(t);
    for (Vertex s : idx.right_of[t]) {
      if (reached[s]) continue;
      reached[s] = true;
      neighborhood.push_back(s);
      if (mate[s] == kFree) {
        throw ContractViolation("hall_violator: matching is not maximum (augmenting path found)");
      }
      if (!reached[mate[s]]) {
        reached[mate[s]] = true;
        queue.push_back(mate[s]);
      }
    }
  }
  HallViolator out{VertexSet(b.left.universe_size(), std::move(deficient)),
                   VertexSet(b.right.universe_size(), std::move(neighborhood))};
  if (out.neighborhood.size() >= out.deficient.size()) {
    throw InternalError("hall_violator: deficiency set is not deficient");
  }
  return out;
}

}  // namespace diamdom
