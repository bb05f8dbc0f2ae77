#include "diamdom/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "diamdom/error.hpp"

namespace diamdom {
namespace {

bool split_by_forbidden_subgraphs(const ClassReport& r) {
  return r.two_k2_free && r.c4_free && r.c5_free;
}

}  // namespace

ClassReport classify(const Graph& g) {
  ClassReport report;
  report.diameter = diameter(g);
  report.girth = girth(g);

  auto check = [&](bool& flag, std::string_view name, PatternName p) {
    if (auto occ = contains_induced(g, p)) {
      flag = false;
      report.witnesses.push_back({name, p, std::move(*occ)});
    }
  };
  check(report.triangle_free, "triangle_free", PatternName::c3);
  check(report.c4_free, "c4_free", PatternName::c4);
  check(report.c5_free, "c5_free", PatternName::c5);
  check(report.claw_free, "claw_free", PatternName::claw);
  check(report.k14_free, "k14_free", PatternName::k14);
  check(report.two_k2_free, "2k2_free", PatternName::two_k2);

  report.split = split_by_forbidden_subgraphs(report);
  if (report.split != split_partition(g).has_value()) {
    throw InternalError("split recognition routes disagree");
  }
  if (!report.split) {
    // Reuse the first refuting occurrence among 2K2, C4, C5.
    for (const auto& w : std::vector<ClassWitness>(report.witnesses)) {
      if (w.pattern == PatternName::two_k2 || w.pattern == PatternName::c4 ||
          w.pattern == PatternName::c5) {
        report.witnesses.push_back({"split", w.pattern, w.occurrence});
        break;
      }
    }
  }

  for (PatternName f : line_graph_obstructions()) {
    if (auto occ = contains_induced(g, f)) {
      report.line_graph = false;
      report.witnesses.push_back({"line_graph", f, std::move(*occ)});
      break;
    }
  }
  return report;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(order[i]) >= i) m = i + 1;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != m * (m - (m > 0 ? 1 : 0)) + tail) return std::nullopt;

  SplitPartition part{
      VertexSet(n, std::vector<Vertex>(order.begin(), order.begin() + static_cast<long>(m))),
      VertexSet(n, std::vector<Vertex>(order.begin() + static_cast<long>(m), order.end()))};
  if (!is_clique(g, part.clique) || !is_stable_set(g, part.stable)) {
    throw InternalError("degree-sequence split partition is not a clique/stable split");
  }
  return part;
}

LineGraph line_graph_of(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  for (Vertex i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<Edge> adj;
  for (const auto& around : incident) {
    for (std::size_t a = 0; a < around.size(); ++a) {
      for (std::size_t b = a + 1; b < around.size(); ++b) adj.push_back({around[a], around[b]});
    }
  }
  return {Graph(edges.size(), adj), edges};
}

namespace {

/// Backtracking search for a Krausz partition of a connected graph.
class KrauszSearch {
 public:
  explicit KrauszSearch(const Graph& l)
      : l_(l),
        owner_(l.edge_count(), -1),
        cliques_of_(l.vertex_count()),
        assigned_(l.vertex_count(), 0) {}

  bool run() { return assign_from(0); }

  const std::vector<std::vector<Vertex>>& cliques() const { return cliques_; }
  const std::vector<std::vector<int>>& cliques_of() const { return cliques_of_; }

 private:
  std::size_t edge_index(Vertex a, Vertex b) const {
    Edge e = make_edge(a, b);
    const auto& edges = l_.edges();
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) -
                                    edges.begin());
  }

  bool can_join(int clique, Vertex y) const {
    if (cliques_of_[y].size() >= 2) return false;
    for (Vertex c : cliques_[static_cast<std::size_t>(clique)]) {
      if (c == y || !l_.adjacent(c, y) || owner_[edge_index(c, y)] >= 0) return false;
    }
    return true;
  }

  // Unassigned edges at x that cannot go into one of x's current cliques all
  // need the same new clique, so with two cliques there must be none and with
  // one clique those neighbors must be pairwise adjacent.
  bool locally_feasible(Vertex x) const {
    const auto& mine = cliques_of_[x];
    if (assigned_[x] == l_.degree(x) || mine.empty()) return true;
    std::vector<Vertex> stuck;
    for (Vertex y : l_.neighbors(x)) {
      if (owner_[edge_index(x, y)] >= 0) continue;
      if (std::none_of(mine.begin(), mine.end(), [&](int c) { return can_join(c, y); })) {
        stuck.push_back(y);
      }
    }
    if (mine.size() == 2) return stuck.empty();
    for (std::size_t i = 0; i < stuck.size(); ++i) {
      for (std::size_t j = i + 1; j < stuck.size(); ++j) {
        if (!l_.adjacent(stuck[i], stuck[j])) return false;
      }
    }
    return true;
  }

  bool try_join(int clique, Vertex x, std::size_t next) {
    const auto slot = static_cast<std::size_t>(clique);
    if (cliques_of_[x].size() >= 2) return false;
    for (Vertex c : cliques_[slot]) {
      if (c == x || !l_.adjacent(c, x) || owner_[edge_index(c, x)] >= 0) return false;
    }
    for (Vertex c : cliques_[slot]) {
      owner_[edge_index(c, x)] = clique;
      ++assigned_[c];
      ++assigned_[x];
    }
    cliques_[slot].push_back(x);
    cliques_of_[x].push_back(clique);
    bool ok = std::all_of(cliques_[slot].begin(), cliques_[slot].end(),
                          [&](Vertex c) { return locally_feasible(c); }) &&
              assign_from(next);
    if (ok) return true;
    // Recursion may have reallocated cliques_; index again.
    cliques_of_[x].pop_back();
    cliques_[slot].pop_back();
    for (Vertex c : cliques_[slot]) {
      owner_[edge_index(c, x)] = -1;
      --assigned_[c];
      --assigned_[x];
    }
    return false;
  }

  bool try_new(Vertex u, Vertex w, std::size_t idx, std::size_t next) {
    if (cliques_of_[u].size() >= 2 || cliques_of_[w].size() >= 2) return false;
    const int id = static_cast<int>(cliques_.size());
    cliques_.push_back({u, w});
    owner_[idx] = id;
    ++assigned_[u];
    ++assigned_[w];
    cliques_of_[u].push_back(id);
    cliques_of_[w].push_back(id);
    if (locally_feasible(u) && locally_feasible(w) && assign_from(next)) return true;
    cliques_of_[w].pop_back();
    cliques_of_[u].pop_back();
    --assigned_[w];
    --assigned_[u];
    owner_[idx] = -1;
    cliques_.pop_back();
    return false;
  }

  bool assign_from(std::size_t idx) {
    const auto& edges = l_.edges();
    while (idx < edges.size() && owner_[idx] >= 0) ++idx;
    if (idx == edges.size()) return true;
    const Vertex u = edges[idx].u;
    const Vertex w = edges[idx].v;
    // Copies: the clique lists may grow during recursion.
    const std::vector<int> at_u = cliques_of_[u];
    const std::vector<int> at_w = cliques_of_[w];
    for (int c : at_u) {
      if (try_join(c, w, idx + 1)) return true;
    }
    for (int c : at_w) {
      if (try_join(c, u, idx + 1)) return true;
    }
    return try_new(u, w, idx, idx + 1);
  }

  const Graph& l_;
  std::vector<int> owner_;
  std::vector<std::vector<Vertex>> cliques_;
  std::vector<std::vector<int>> cliques_of_;
  std::vector<std::size_t> assigned_;
};

}  // namespace

std::optional<RootGraph> root_graph(const Graph& l) {
  if (l.vertex_count() == 0) throw ContractViolation("root_graph: empty graph");
  if (!is_connected(l)) throw ContractViolation("root_graph: input must be connected");

  KrauszSearch search(l);
  if (!search.run()) return std::nullopt;

  // Root vertices: one per clique, then a private endpoint for every line
  // vertex that sits in fewer than two cliques.
  Vertex next = static_cast<Vertex>(search.cliques().size());
  std::vector<Edge> edge_of;
  edge_of.reserve(l.vertex_count());
  for (Vertex x = 0; x < l.vertex_count(); ++x) {
    std::vector<Vertex> ends;
    for (int c : search.cliques_of()[x]) ends.push_back(static_cast<Vertex>(c));
    while (ends.size() < 2) ends.push_back(next++);
    edge_of.push_back(make_edge(ends[0], ends[1]));
  }
  Graph root(next, edge_of);

  if (root.edge_count() != l.vertex_count()) {
    throw InternalError("root_graph: reconstructed root has parallel edges");
  }
  for (Vertex x = 0; x < l.vertex_count(); ++x) {
    for (Vertex y = x + 1; y < l.vertex_count(); ++y) {
      const Edge& a = edge_of[x];
      const Edge& b = edge_of[y];
      const bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (touch != l.adjacent(x, y)) {
        throw InternalError("root_graph: rebuilt line graph differs from input");
      }
    }
  }
  return RootGraph{std::move(root), std::move(edge_of)};
}

namespace {

/// Joint colour refinement so colours are comparable across both graphs.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_together(const Graph& a,
                                                                              const Graph& b) {
  std::vector<std::size_t> ca(a.vertex_count());
  std::vector<std::size_t> cb(b.vertex_count());
  for (Vertex v = 0; v < a.vertex_count(); ++v) ca[v] = a.degree(v);
  for (Vertex v = 0; v < b.vertex_count(); ++v) cb[v] = b.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    auto signature = [](const Graph& g, const std::vector<std::size_t>& c, Vertex v) {
      std::vector<std::size_t> sig{c[v]};
      for (Vertex w : g.neighbors(v)) sig.push_back(c[w]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<std::size_t>> sa(a.vertex_count());
    std::vector<std::vector<std::size_t>> sb(b.vertex_count());
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
      sa[v] = signature(a, ca, v);
      ids.emplace(sa[v], 0);
    }
    for (Vertex v = 0; v < b.vertex_count(); ++v) {
      sb[v] = signature(b, cb, v);
      ids.emplace(sb[v], 0);
    }
    std::size_t id = 0;
    for (auto& [sig, value] : ids) value = id++;
    for (Vertex v = 0; v < a.vertex_count(); ++v) ca[v] = ids[sa[v]];
    for (Vertex v = 0; v < b.vertex_count(); ++v) cb[v] = ids[sb[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {ca, cb};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<std::size_t> ca,
            std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    // BFS order keeps each placed vertex adjacent to an earlier one where possible.
    std::vector<bool> seen(a.vertex_count(), false);
    for (Vertex s = 0; s < a.vertex_count(); ++s) {
      if (seen[s]) continue;
      auto dist = bfs_distances(a, s);
      std::vector<Vertex> comp;
      for (Vertex v = 0; v < a.vertex_count(); ++v) {
        if (dist[v] != kUnreachable) comp.push_back(v);
      }
      std::stable_sort(comp.begin(), comp.end(),
                       [&](Vertex x, Vertex y) { return dist[x] < dist[y]; });
      for (Vertex v : comp) {
        seen[v] = true;
        order_.push_back(v);
      }
    }
    map_.assign(a.vertex_count(), 0);
    used_.assign(b.vertex_count(), false);
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const Vertex x = order_[pos];
    for (Vertex y = 0; y < b_.vertex_count(); ++y) {
      if (used_[y] || cb_[y] != ca_[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < pos && ok; ++j) {
        ok = a_.adjacent(x, order_[j]) == b_.adjacent(y, map_[order_[j]]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(pos + 1)) return true;
      used_[y] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::size_t> ca_;
  std::vector<std::size_t> cb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto [ca, cb] = refine_together(a, b);
  auto ha = ca;
  auto hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  return IsoSearch(a, b, std::move(ca), std::move(cb)).run();
}

}  // namespace diamdom
