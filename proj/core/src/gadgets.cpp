#include "diamdom/gadgets.hpp"

#include <algorithm>
#include <array>

#include "diamdom/error.hpp"
#include "diamdom/oracle.hpp"
#include "diamdom/pattern.hpp"

namespace diamdom {
namespace {

class Builder {
 public:
  Vertex add(std::string role, std::vector<Vertex> source = {}) {
    provenance_.push_back({std::move(role), std::move(source)});
    return static_cast<Vertex>(provenance_.size() - 1);
  }
  void link(Vertex a, Vertex b) { edges_.push_back(make_edge(a, b)); }
  void clique(const std::vector<Vertex>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) link(members[i], members[j]);
    }
  }

  ReductionInstance finish(ReductionKind kind, std::size_t k, std::size_t kprime, std::size_t d,
                           const Graph& source) {
    ReductionInstance inst;
    inst.gprime = Graph(provenance_.size(), edges_);
    inst.kprime = kprime;
    inst.kind = kind;
    inst.k = k;
    inst.d = d;
    inst.provenance = std::move(provenance_);
    inst.source_used = source;
    inst.source_ids.resize(source.vertex_count());
    for (Vertex v = 0; v < source.vertex_count(); ++v) inst.source_ids[v] = v;
    return inst;
  }

 private:
  std::vector<Provenance> provenance_;
  std::vector<Edge> edges_;
};

Vertex find_role(const ReductionInstance& inst, std::string_view role,
                 const std::vector<Vertex>& source) {
  for (Vertex v = 0; v < inst.provenance.size(); ++v) {
    if (inst.provenance[v].role == role && inst.provenance[v].source == source) return v;
  }
  throw InternalError("reduction instance has no vertex with role " + std::string(role));
}

void require_diameter(const Graph& g, std::size_t d, const char* what) {
  Distance got = diameter(g);
  if (!got || *got != d) {
    throw InternalError(std::string(what) + ": gadget graph has diameter " +
                        (got ? std::to_string(*got) : std::string("infinity")) + ", expected " +
                        std::to_string(d));
  }
}

std::size_t index_in(std::span<const Vertex> list, Vertex v) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), v) - list.begin());
}

// Tail vertices that dominate q and t1..t_{L-1} along the path, given that s dominates t0.
std::vector<Vertex> tail_dominators(const ReductionInstance& inst) {
  std::vector<Vertex> tail;
  for (std::size_t i = 0;; ++i) {
    auto it = std::find_if(inst.provenance.begin(), inst.provenance.end(), [&](const Provenance& p) {
      return p.role == "tail" + std::to_string(i);
    });
    if (it == inst.provenance.end()) break;
    tail.push_back(static_cast<Vertex>(it - inst.provenance.begin()));
  }
  std::vector<Vertex> picked;
  if (tail.empty()) return picked;
  std::vector<bool> covered(inst.gprime.vertex_count(), false);
  auto take = [&](Vertex v) {
    picked.push_back(v);
    covered[v] = true;
    for (Vertex w : inst.gprime.neighbors(v)) covered[w] = true;
  };
  covered[tail[0]] = true;
  auto q = std::find_if(inst.provenance.begin(), inst.provenance.end(),
                        [](const Provenance& p) { return p.role == "q"; });
  if (q != inst.provenance.end()) take(tail.at(1));
  for (std::size_t i = 1; i < tail.size(); ++i) {
    if (!covered[tail[i]]) take(tail[std::min(i + 1, tail.size() - 1)]);
  }
  return picked;
}

std::optional<VertexSet> minimum_vertex_cover(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    do {
      bool covers = std::all_of(g.edges().begin(), g.edges().end(),
                                [&](const Edge& e) { return pick[e.u] || pick[e.v]; });
      if (covers) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v) {
          if (pick[v]) members.push_back(v);
        }
        return VertexSet(n, std::move(members));
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::cubic_clawfree: return "cubic-clawfree";
    case ReductionKind::vc_k14: return "vc-k14";
    case ReductionKind::split_trianglefree: return "split-trianglefree";
  }
  return "unknown";
}

ReductionKind reduction_kind_from_string(std::string_view s) {
  if (s == "cubic-clawfree" || s == "cubic_clawfree") return ReductionKind::cubic_clawfree;
  if (s == "vc-k14" || s == "vc_k14") return ReductionKind::vc_k14;
  if (s == "split-trianglefree" || s == "split_trianglefree") {
    return ReductionKind::split_trianglefree;
  }
  throw ContractViolation("unknown reduction kind '" + std::string(s) + "'");
}

ReductionInstance reduce_cubic_clawfree(const Graph& g, std::size_t k, std::size_t d) {
  if (d < 3) throw ContractViolation("reduce_cubic_clawfree: d must be >= 3");
  const std::size_t n = g.vertex_count();
  if (n == 0 || !is_connected(g) || g.min_degree() != 3 || g.max_degree() != 3) {
    throw ClassMismatch("reduce_cubic_clawfree: source must be a connected cubic graph");
  }

  Builder b;
  std::vector<std::array<Vertex, 3>> outer(n);
  std::vector<Vertex> clique;
  for (Vertex v = 0; v < n; ++v) {
    std::array<Vertex, 6> x{};
    std::array<Vertex, 3> grey{};
    for (int i = 0; i < 3; ++i) outer[v][i] = b.add("outer" + std::to_string(i + 1), {v});
    for (int i = 0; i < 6; ++i) x[i] = b.add("inner" + std::to_string(i + 1), {v});
    for (int i = 0; i < 3; ++i) grey[i] = b.add("grey" + std::to_string(i + 1), {v});
    for (int i = 0; i < 6; ++i) b.link(x[i], x[(i + 1) % 6]);
    for (int i = 0; i < 3; ++i) {
      b.clique({grey[i], x[2 * i], x[2 * i + 1]});
      for (Vertex w : {grey[i], x[2 * i], x[2 * i + 1]}) b.link(outer[v][i], w);
      clique.push_back(grey[i]);
    }
  }
  Vertex s = b.add("s");
  clique.push_back(s);
  b.clique(clique);
  for (const Edge& e : g.edges()) {
    b.link(outer[e.u][index_in(g.neighbors(e.u), e.v)], outer[e.v][index_in(g.neighbors(e.v), e.u)]);
  }

  std::size_t kprime = 2 * n + k + 1;
  if (d == 3) {
    b.link(s, b.add("t"));
  } else {
    kprime += d / 3;
    std::vector<Vertex> tail;
    for (std::size_t i = 0; i + 2 < d; ++i) tail.push_back(b.add("tail" + std::to_string(i)));
    b.link(s, tail[0]);
    for (std::size_t i = 0; i + 1 < tail.size(); ++i) b.link(tail[i], tail[i + 1]);
    if (d % 3 == 0) {
      Vertex q = b.add("q");
      b.link(q, tail[0]);
      b.link(q, tail[1]);
    }
  }
  ReductionInstance inst = b.finish(ReductionKind::cubic_clawfree, k, kprime, d, g);

  const Graph& gp = inst.gprime;
  if (contains_induced(gp, PatternName::claw)) {
    throw InternalError("reduce_cubic_clawfree: gadget graph contains a claw");
  }
  require_diameter(gp, d, "reduce_cubic_clawfree");
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> inner;
    for (int i = 1; i <= 6; ++i) inner.push_back(find_role(inst, "inner" + std::to_string(i), {v}));
    auto c6 = induced_subgraph(gp, VertexSet(gp.vertex_count(), inner));
    if (!are_isomorphic(c6.graph, graphs::cycle(6))) {
      throw InternalError("reduce_cubic_clawfree: inner vertices do not induce C6");
    }
    for (Vertex o : outer[v]) {
      auto nb = gp.neighbors(o);
      auto external = std::count_if(nb.begin(), nb.end(), [&](Vertex w) {
        return inst.provenance[w].source != std::vector<Vertex>{v};
      });
      if (external != 1) {
        throw InternalError("reduce_cubic_clawfree: outer vertex without exactly one external neighbor");
      }
    }
  }
  return inst;
}

ReductionInstance reduce_vc_k14(const Graph& g, std::size_t k) {
  if (g.edge_count() == 0) throw ClassMismatch("reduce_vc_k14: source graph has no edges");
  const std::size_t n = g.vertex_count();
  const auto& edges = g.edges();
  const std::size_t m = edges.size();

  Builder b;
  std::vector<Vertex> v1(n);
  for (Vertex v = 0; v < n; ++v) v1[v] = b.add("V1", {v});
  // copies[c][i]: copy c (0 -> E1, 1 -> E2) of edge i.
  std::array<std::vector<Vertex>, 2> copies;
  for (int c = 0; c < 2; ++c) {
    for (const Edge& e : edges) copies[c].push_back(b.add(c == 0 ? "E1" : "E2", {e.u, e.v}));
  }
  std::vector<Vertex> hub_clique = v1;
  for (std::size_t a = 0; a < 2 * m; ++a) {
    for (std::size_t z = a + 1; z < 2 * m; ++z) {
      const Edge& ea = edges[a % m];
      const Edge& ez = edges[z % m];
      if (ea.u == ez.u || ea.u == ez.v || ea.v == ez.u || ea.v == ez.v) continue;
      std::string role = "S" + std::to_string(a / m + 1) + std::to_string(z / m + 1);
      Vertex sv = b.add(role, {ea.u, ea.v, ez.u, ez.v});
      b.link(sv, copies[a / m][a % m]);
      b.link(sv, copies[z / m][z % m]);
      hub_clique.push_back(sv);
    }
  }
  hub_clique.push_back(b.add("s"));
  b.clique(hub_clique);
  for (Vertex u = 0; u < n; ++u) {
    for (int c = 0; c < 2; ++c) {
      std::vector<Vertex> members{v1[u]};
      for (std::size_t i = 0; i < m; ++i) {
        if (edges[i].u == u || edges[i].v == u) members.push_back(copies[c][i]);
      }
      b.clique(members);
    }
  }

  ReductionInstance inst = b.finish(ReductionKind::vc_k14, k, k, 2, g);
  if (contains_induced(inst.gprime, PatternName::k14)) {
    throw InternalError("reduce_vc_k14: gadget graph contains K14");
  }
  require_diameter(inst.gprime, 2, "reduce_vc_k14");
  return inst;
}

ReductionInstance reduce_split_trianglefree(const Graph& g, const SplitPartition& partition,
                                            std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (partition.clique.universe_size() != n || partition.stable.universe_size() != n ||
      partition.clique.size() + partition.stable.size() != n ||
      std::any_of(partition.clique.begin(), partition.clique.end(),
                  [&](Vertex v) { return partition.stable.contains(v); }) ||
      !is_clique(g, partition.clique) || !is_stable_set(g, partition.stable)) {
    throw ClassMismatch("reduce_split_trianglefree: partition is not a clique/stable split of g");
  }
  Distance d0 = diameter(g);
  if (!d0 || *d0 != 2) throw ClassMismatch("reduce_split_trianglefree: source must have diameter 2");

  auto reduced = simplicial_reduce(g);
  std::vector<std::string> notices;
  if (!reduced.removed.empty()) {
    std::string list;
    for (Vertex v : reduced.removed) list += (list.empty() ? "" : " ") + std::to_string(v);
    notices.push_back("simplicial reduction removed vertices " + list);
  }
  const Graph& h = reduced.graph;
  Distance d1 = diameter(h);
  if (!d1 || *d1 != 2) {
    throw ClassMismatch("reduce_split_trianglefree: diameter is not 2 after simplicial reduction");
  }
  std::vector<Vertex> kside;
  std::vector<Vertex> sside;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    (partition.clique.contains(reduced.to_host[v]) ? kside : sside).push_back(v);
  }

  Builder b;
  const std::size_t hn = h.vertex_count();
  std::vector<Vertex> k1(hn), s1(hn), s2(hn);
  for (Vertex v : kside) k1[v] = b.add("K1", {reduced.to_host[v]});
  for (Vertex v : sside) s1[v] = b.add("S1", {reduced.to_host[v]});
  for (Vertex v : sside) s2[v] = b.add("S2", {reduced.to_host[v]});
  Vertex t = b.add("t");
  Vertex s = b.add("s");
  for (Vertex u : kside) {
    b.link(t, k1[u]);
    for (Vertex v : sside) b.link(k1[u], h.adjacent(u, v) ? s1[v] : s2[v]);
  }
  for (Vertex v : sside) {
    b.link(s1[v], s2[v]);
    b.link(s, s2[v]);
  }
  b.link(s, t);

  ReductionInstance inst = b.finish(ReductionKind::split_trianglefree, k, k + 1, 2, h);
  inst.source_ids = reduced.to_host;
  inst.notices = std::move(notices);
  if (contains_induced(inst.gprime, PatternName::c3)) {
    throw InternalError("reduce_split_trianglefree: gadget graph contains a triangle");
  }
  require_diameter(inst.gprime, 2, "reduce_split_trianglefree");
  return inst;
}

VertexSet forward_witness(const ReductionInstance& inst, const VertexSet& solution) {
  const Graph& src = inst.source_used;
  auto in = solution.mask();
  in.resize(src.vertex_count(), false);
  std::vector<Vertex> out;

  switch (inst.kind) {
    case ReductionKind::cubic_clawfree: {
      if (!is_dominating_set(src, solution)) {
        throw ContractViolation("forward_witness: not a dominating set of the source");
      }
      out.push_back(find_role(inst, "s", {}));
      for (Vertex v = 0; v < src.vertex_count(); ++v) {
        if (in[v]) {
          for (int i = 1; i <= 3; ++i) out.push_back(find_role(inst, "outer" + std::to_string(i), {v}));
          continue;
        }
        // Inner pair leaving outer o_i undominated, where the i-th neighbor is in D.
        static constexpr int kPair[3][2] = {{3, 6}, {5, 2}, {1, 4}};
        auto nb = src.neighbors(v);
        std::size_t i = static_cast<std::size_t>(
            std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return in[w]; }) - nb.begin());
        for (int x : kPair[i]) out.push_back(find_role(inst, "inner" + std::to_string(x), {v}));
      }
      for (Vertex v : tail_dominators(inst)) out.push_back(v);
      break;
    }
    case ReductionKind::vc_k14: {
      for (const Edge& e : src.edges()) {
        if (!in[e.u] && !in[e.v]) {
          throw ContractViolation("forward_witness: not a vertex cover of the source");
        }
      }
      for (Vertex v : solution) out.push_back(find_role(inst, "V1", {v}));
      break;
    }
    case ReductionKind::split_trianglefree: {
      if (!is_dominating_set(src, solution)) {
        throw ContractViolation("forward_witness: not a dominating set of the source");
      }
      for (Vertex v : solution) {
        Vertex host = inst.source_ids[v];
        auto it = std::find_if(inst.provenance.begin(), inst.provenance.end(), [&](const Provenance& p) {
          return (p.role == "K1" || p.role == "S1") && p.source == std::vector<Vertex>{host};
        });
        out.push_back(static_cast<Vertex>(it - inst.provenance.begin()));
      }
      out.push_back(find_role(inst, "t", {}));
      break;
    }
  }
  return VertexSet(inst.gprime.vertex_count(), std::move(out));
}

bool ReductionReport::passed() const {
  return !incomplete && std::all_of(checks.begin(), checks.end(),
                                    [](const CheckResult& c) { return c.passed; });
}

ReductionReport verify_reduction(const ReductionInstance& inst, const Graph& source,
                                 VerifyOptions options) {
  ReductionReport report;
  const Graph& gp = inst.gprime;

  PatternName forbidden = inst.kind == ReductionKind::cubic_clawfree ? PatternName::claw
                          : inst.kind == ReductionKind::vc_k14       ? PatternName::k14
                                                                     : PatternName::c3;
  auto occ = contains_induced(gp, forbidden);
  report.checks.push_back({"structure", !occ,
                           std::string(to_string(forbidden)) + (occ ? " found" : "-free")});
  Distance dg = diameter(gp);
  report.checks.push_back({"diameter", dg && *dg == inst.d,
                           "diameter " + (dg ? std::to_string(*dg) : std::string("infinity")) +
                               ", expected " + std::to_string(inst.d)});

  // Source side: forward witness from a real solution, value from the oracle.
  bool vc = inst.kind == ReductionKind::vc_k14;
  VertexSet solution = vc ? *minimum_vertex_cover(inst.source_used)
                          : gamma_exact(inst.source_used).set;
  report.source_value = vc ? oracle::vertex_cover_oracle(source) : oracle::gamma_oracle(source);
  if (solution.size() <= inst.k) {
    VertexSet dprime = forward_witness(inst, solution);
    bool ok = dprime.size() <= inst.kprime && is_dominating_set(gp, dprime);
    report.checks.push_back({"forward", ok,
                             "constructive set of size " + std::to_string(dprime.size()) +
                                 (ok ? " dominates G'" : " fails") + ", k' = " +
                                 std::to_string(inst.kprime)});
  } else {
    report.checks.push_back({"forward", true, "vacuous: source optimum exceeds k"});
  }

  try {
    if (gp.vertex_count() <= oracle::guards().gamma) {
      report.target_gamma = oracle::gamma_oracle(gp);
    } else {
      report.target_gamma = gamma_exact(gp, ExactOptions{options.node_limit}).gamma;
    }
  } catch (const ResourceLimit&) {
    report.incomplete = true;
    return report;
  }
  bool source_yes = *report.source_value <= inst.k;
  bool target_yes = *report.target_gamma <= inst.kprime;
  report.checks.push_back({"equivalence", source_yes == target_yes,
                           std::string(vc ? "VC" : "gamma") + "(G) = " +
                               std::to_string(*report.source_value) + " <= " +
                               std::to_string(inst.k) + " is " + (source_yes ? "true" : "false") +
                               "; gamma(G') = " + std::to_string(*report.target_gamma) + " <= " +
                               std::to_string(inst.kprime) + " is " +
                               (target_yes ? "true" : "false")});
  return report;
}

}  // namespace diamdom
