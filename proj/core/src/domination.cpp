#include "diamdom/domination.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "diamdom/error.hpp"
#include "diamdom/pattern.hpp"
#include "diamdom/recognition.hpp"

namespace diamdom {
namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

std::vector<Bits> closed_neighborhoods(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Bits> out(n, Bits(n));
  for (Vertex v = 0; v < n; ++v) {
    out[v].set(v);
    for (Vertex w : g.neighbors(v)) out[v].set(w);
  }
  return out;
}

DominationCertificate certify(const Graph& g, std::vector<Vertex> members, Method method) {
  VertexSet set(g.vertex_count(), std::move(members));
  if (!is_dominating_set(g, set)) {
    throw InternalError(std::string(to_string(method)) + " produced a non-dominating set");
  }
  std::size_t size = set.size();
  return DominationCertificate{std::move(set), size, method};
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, ExactOptions options)
      : n_(g.vertex_count()), closed_(closed_neighborhoods(g)), options_(options) {}

  std::vector<Vertex> run() {
    Bits undominated(n_);
    undominated.set();
    best_ = greedy(undominated);
    search(undominated);
    return best_;
  }

 private:
  std::vector<Vertex> greedy(Bits undominated) const {
    std::vector<Vertex> picked;
    while (undominated.any()) {
      Vertex arg = 0;
      std::size_t top = 0;
      for (Vertex v = 0; v < n_; ++v) {
        std::size_t gain = (closed_[v] & undominated).count();
        if (gain > top) {
          top = gain;
          arg = v;
        }
      }
      picked.push_back(arg);
      undominated -= closed_[arg];
    }
    return picked;
  }

  std::size_t lower_bound(const Bits& undominated) const {
    std::vector<std::size_t> gain(n_);
    std::size_t max_gain = 0;
    for (Vertex v = 0; v < n_; ++v) {
      gain[v] = (closed_[v] & undominated).count();
      max_gain = std::max(max_gain, gain[v]);
    }
    const std::size_t remaining = undominated.count();
    std::size_t bound = (remaining + max_gain - 1) / max_gain;

    // Each undominated u needs a dominator in N[u]; charging 1/gain(dominator)
    // to u never exceeds one unit per chosen vertex.
    double fractional = 0.0;
    Bits used(n_);
    std::size_t packing = 0;
    for (std::size_t u = undominated.find_first(); u != Bits::npos; u = undominated.find_next(u)) {
      std::size_t best_gain = 0;
      const Bits& nu = closed_[u];
      for (std::size_t v = nu.find_first(); v != Bits::npos; v = nu.find_next(v)) {
        best_gain = std::max(best_gain, gain[v]);
      }
      fractional += 1.0 / static_cast<double>(best_gain);
      if (!nu.intersects(used)) {
        used |= nu;
        ++packing;
      }
    }
    bound = std::max(bound, static_cast<std::size_t>(std::ceil(fractional - 1e-9)));
    return std::max(bound, packing);
  }

  void search(const Bits& undominated) {
    if (options_.node_limit != 0 && ++nodes_ > options_.node_limit) {
      throw ResourceLimit("gamma_exact node limit of " + std::to_string(options_.node_limit) +
                              " reached",
                          nodes_ - 1, best_.size());
    }
    if (undominated.none()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + lower_bound(undominated) >= best_.size()) return;

    std::size_t x = undominated.find_first();
    for (std::size_t u = undominated.find_next(x); u != Bits::npos; u = undominated.find_next(u)) {
      if (closed_[u].count() < closed_[x].count()) x = u;
    }

    struct Option {
      Vertex v;
      Bits cover;
      std::size_t gain;
    };
    std::vector<Option> options;
    const Bits& nx = closed_[x];
    for (std::size_t v = nx.find_first(); v != Bits::npos; v = nx.find_next(v)) {
      Bits cover = closed_[v] & undominated;
      std::size_t gain = cover.count();
      options.push_back({static_cast<Vertex>(v), std::move(cover), gain});
    }
    std::vector<Option> kept;
    for (const Option& a : options) {
      bool dominated = std::any_of(options.begin(), options.end(), [&](const Option& b) {
        if (b.v == a.v || !a.cover.is_subset_of(b.cover)) return false;
        return a.cover != b.cover || b.v < a.v;
      });
      if (!dominated) kept.push_back(a);
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const Option& a, const Option& b) { return a.gain > b.gain; });

    for (const Option& o : kept) {
      chosen_.push_back(o.v);
      search(undominated - o.cover);
      chosen_.pop_back();
    }
  }

  std::size_t n_;
  std::vector<Bits> closed_;
  ExactOptions options_;
  std::vector<Vertex> best_;
  std::vector<Vertex> chosen_;
  std::size_t nodes_ = 0;
};

bool next_combination(std::vector<Vertex>& pick, std::size_t n) {
  const std::size_t k = pick.size();
  for (std::size_t i = k; i-- > 0;) {
    if (pick[i] < n - k + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<Vertex>> smallest_dominating_subset(const Graph& g,
                                                              std::size_t budget) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::vector<Vertex>{};
  const auto closed = closed_neighborhoods(g);
  for (std::size_t size = 1; size <= std::min(budget, n); ++size) {
    std::vector<Vertex> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
    do {
      Bits covered(n);
      for (Vertex v : pick) covered |= closed[v];
      if (covered.all()) return pick;
    } while (next_combination(pick, n));
  }
  return std::nullopt;
}

bool open_subset(const Graph& g, Vertex u, Vertex v) {
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  return std::includes(nv.begin(), nv.end(), nu.begin(), nu.end());
}

void require_diameter_at_most_two(const Graph& g, const char* who) {
  Distance d = diameter(g);
  if (!d || *d > 2) {
    throw ClassMismatch(std::string(who) + ": graph does not have diameter at most 2");
  }
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::bounded: return "bounded";
    case Method::line_diam2: return "line_diam2";
    case Method::girth5_diam2: return "girth5_diam2";
    case Method::clawfree_diam2: return "clawfree_diam2";
    case Method::fallback_exact: return "fallback_exact";
  }
  return "unknown";
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  const std::size_t n = g.vertex_count();
  if (s.universe_size() != n) return false;
  auto in = s.mask();
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w]; })) return false;
  }
  return true;
}

DominationCertificate gamma_exact(const Graph& g, ExactOptions options) {
  if (g.vertex_count() == 0) return certify(g, {}, Method::exact);
  return certify(g, BranchAndBound(g, options).run(), Method::exact);
}

std::optional<DominationCertificate> gamma_bounded(const Graph& g, std::size_t budget) {
  if (budget == 0) throw ContractViolation("gamma_bounded: budget must be >= 1");
  auto found = smallest_dominating_subset(g, budget);
  if (!found) return std::nullopt;
  return certify(g, std::move(*found), Method::bounded);
}

SimplicialReduction simplicial_reduce(const Graph& g) {
  SimplicialReduction out{g, VertexSet(g.vertex_count()), {}};
  out.to_host.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.to_host[v] = v;
  std::vector<Vertex> removed;

  bool changed = true;
  while (changed) {
    changed = false;
    const Graph& cur = out.graph;
    for (Vertex v = 0; v < cur.vertex_count() && !changed; ++v) {
      if (!is_simplicial(cur, v)) continue;
      for (Vertex u = 0; u < cur.vertex_count(); ++u) {
        // An isolated u is excluded: with two isolated vertices, deleting one changes gamma.
        if (u == v || cur.degree(u) == 0 || !open_subset(cur, u, v)) continue;
        auto next = remove_vertices(cur, VertexSet(cur.vertex_count(), {v}));
        removed.push_back(out.to_host[v]);
        std::vector<Vertex> to_host;
        for (Vertex w : next.to_host) to_host.push_back(out.to_host[w]);
        out.graph = std::move(next.graph);
        out.to_host = std::move(to_host);
        changed = true;
        break;
      }
    }
  }
  out.removed = VertexSet(g.vertex_count(), std::move(removed));
  return out;
}

DominationCertificate gamma_girth5_diam2(const Graph& g) {
  Distance gi = girth(g);
  Distance d = diameter(g);
  if (!gi || *gi != 5 || !d || *d != 2) {
    throw ClassMismatch("gamma_girth5_diam2: graph must have girth 5 and diameter 2");
  }
  const std::size_t delta = g.max_degree();
  if (!is_regular(g)) throw InternalError("girth 5 diameter 2 graph is not regular");
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      auto nu = g.closed_neighborhood(u);
      auto nv = g.closed_neighborhood(v);
      std::vector<Vertex> common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      if (common.size() != 1) {
        throw InternalError("non-adjacent pair without exactly one common neighbor in a girth 5 "
                            "diameter 2 graph");
      }
    }
  }
  auto nb = g.neighbors(0);
  auto cert = certify(g, std::vector<Vertex>(nb.begin(), nb.end()), Method::girth5_diam2);
  if (cert.gamma != delta) throw InternalError("N(v) does not have size max degree");
  return cert;
}

DominationCertificate gamma_line_diam2(const Graph& l) {
  if (l.vertex_count() == 0) return certify(l, {}, Method::line_diam2);
  require_diameter_at_most_two(l, "gamma_line_diam2");
  auto root = root_graph(l);
  if (!root) throw ClassMismatch("gamma_line_diam2: graph is not a line graph");

  Matching m = minimum_maximal_matching(root->root, two_k2_free_stable_set_cap(root->root));
  std::unordered_map<std::uint64_t, Vertex> index;
  for (Vertex i = 0; i < root->edge_of.size(); ++i) {
    const Edge& e = root->edge_of[i];
    index.emplace((std::uint64_t{e.u} << 32) | e.v, i);
  }
  std::vector<Vertex> members;
  for (const Edge& e : m.edges()) members.push_back(index.at((std::uint64_t{e.u} << 32) | e.v));
  return certify(l, std::move(members), Method::line_diam2);
}

ClawFreeResult solve_clawfree_diam2(const Graph& g, ExactOptions fallback) {
  require_diameter_at_most_two(g, "gamma_clawfree_diam2");
  if (contains_induced(g, PatternName::claw)) {
    throw ClassMismatch("gamma_clawfree_diam2: graph contains a claw");
  }

  ClawFreeResult result;
  if (auto small = smallest_dominating_subset(g, 3)) {
    result.certificate = certify(g, std::move(*small), Method::clawfree_diam2);
    result.step = ClawFreeStep::small_gamma;
    return result;
  }

  // gamma >= 4 from here on, so the graph is not complete and has diameter 2.
  Graph cur = g;
  std::vector<Vertex> to_host(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) to_host[v] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : cur.edges()) {
      Vertex u = e.u;
      Vertex v = e.v;
      auto fits = [&](Vertex a, Vertex b) {
        for (Vertex w : cur.neighbors(a)) {
          if (w != b && !cur.adjacent(w, b)) return false;
        }
        return true;
      };
      if (!fits(u, v)) std::swap(u, v);
      if (!fits(u, v)) continue;
      auto next = remove_vertices(cur, VertexSet(cur.vertex_count(), {u}));
      Distance d = diameter(next.graph);
      if (!d || *d != 2) throw InternalError("neighborhood reduction changed the diameter");
      std::vector<Vertex> host;
      for (Vertex w : next.to_host) host.push_back(to_host[w]);
      cur = std::move(next.graph);
      to_host = std::move(host);
      ++result.removed_vertices;
      changed = true;
      break;
    }
  }

  if (root_graph(cur)) {
    auto reduced = gamma_line_diam2(cur);
    std::vector<Vertex> members;
    for (Vertex v : reduced.set) members.push_back(to_host[v]);
    VertexSet lifted(g.vertex_count(), members);
    if (is_dominating_set(g, lifted)) {
      result.certificate = certify(g, std::move(members), Method::clawfree_diam2);
      result.step = ClawFreeStep::line_graph;
      return result;
    }
  }

  auto exact = gamma_exact(g, fallback);
  result.certificate = DominationCertificate{exact.set, exact.gamma, Method::fallback_exact};
  result.step = ClawFreeStep::fallback;
  return result;
}

DominationCertificate gamma_clawfree_diam2(const Graph& g) {
  return solve_clawfree_diam2(g).certificate;
}

}  // namespace diamdom
