#include "diamdom/mmm.hpp"

#include <algorithm>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "diamdom/error.hpp"

namespace diamdom {
namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class StableSetEnumerator {
 public:
  StableSetEnumerator(const Graph& g, std::size_t cap,
                      const std::function<void(const VertexSet&)>& visit)
      : g_(g), cap_(cap), visit_(visit), non_adjacent_(g.vertex_count(), Bits(g.vertex_count())) {
    const std::size_t n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (a != b && !g.adjacent(a, b)) non_adjacent_[a].set(b);
      }
    }
  }

  void run() {
    const std::size_t n = g_.vertex_count();
    if (n == 0) {
      emit({});
      return;
    }
    Bits candidates(n);
    candidates.set();
    expand(candidates, Bits(n));
  }

 private:
  void emit(const std::vector<Vertex>& members) {
    if (count_ == cap_) {
      throw ResourceLimit("maximal stable set enumeration exceeded cap " + std::to_string(cap_),
                          count_);
    }
    ++count_;
    visit_(VertexSet(g_.vertex_count(), members));
  }

  void expand(Bits candidates, Bits excluded) {
    if (candidates.none()) {
      if (excluded.none()) emit(current_);
      return;
    }
    // Tomita pivot: the vertex of P ∪ X with most non-neighbors in P.
    Bits pool = candidates | excluded;
    std::size_t pivot = pool.find_first();
    std::size_t best = (candidates & non_adjacent_[pivot]).count();
    for (std::size_t u = pool.find_next(pivot); u != Bits::npos; u = pool.find_next(u)) {
      std::size_t c = (candidates & non_adjacent_[u]).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    Bits branch = candidates - non_adjacent_[pivot];
    for (std::size_t v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
      current_.push_back(static_cast<Vertex>(v));
      expand(candidates & non_adjacent_[v], excluded & non_adjacent_[v]);
      current_.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  }

  const Graph& g_;
  std::size_t cap_;
  const std::function<void(const VertexSet&)>& visit_;
  std::vector<Bits> non_adjacent_;
  std::vector<Vertex> current_;
  std::size_t count_ = 0;
};

VertexSet neighbors_within(const Graph& g, const VertexSet& of, const VertexSet& within) {
  std::vector<Vertex> out;
  for (Vertex v : of) {
    for (Vertex w : g.neighbors(v)) {
      if (within.contains(w)) out.push_back(w);
    }
  }
  return VertexSet(g.vertex_count(), std::move(out));
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::size_t two_k2_free_stable_set_cap(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n * (n > 0 ? n - 1 : 0) / 2 + 1;
}

void for_each_maximal_stable_set(const Graph& g, std::size_t cap,
                                 const std::function<void(const VertexSet&)>& visit) {
  if (cap == 0) throw ContractViolation("stable set enumeration cap must be >= 1");
  StableSetEnumerator(g, cap, visit).run();
}

std::vector<VertexSet> enumerate_maximal_stable_sets(const Graph& g, std::size_t cap) {
  std::vector<VertexSet> out;
  for_each_maximal_stable_set(g, cap, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

StableSetCandidate evaluate_stable_set(const Graph& g, const VertexSet& s) {
  if (!is_maximal_stable_set(g, s)) {
    throw ContractViolation("evaluate_stable_set: S is not a maximal stable set");
  }
  const std::size_t n = g.vertex_count();
  StableSetCandidate cand;
  cand.s = s;

  auto rest = remove_vertices(g, s);
  std::vector<Edge> mu_edges;
  const Matching local = maximum_matching(rest.graph);
  for (const Edge& e : local.edges()) {
    mu_edges.push_back(make_edge(rest.to_host[e.u], rest.to_host[e.v]));
  }
  cand.mu = Matching(n, std::move(mu_edges));

  auto covered = cand.mu.covered().mask();
  std::vector<Vertex> uncovered;
  for (Vertex v : rest.to_host) {
    if (!covered[v]) uncovered.push_back(v);
  }
  cand.t_mu = VertexSet(n, std::move(uncovered));
  if (!is_stable_set(g, cand.t_mu)) {
    throw InternalError("T(mu) is not stable: mu is not a maximum matching of G - S");
  }

  const std::size_t theta_from_matching = cand.mu.size() + cand.t_mu.size();
  const std::size_t twice_theta = n - s.size() + cand.t_mu.size();
  if (twice_theta % 2 != 0 || twice_theta / 2 != theta_from_matching) {
    throw InternalError("theta identity failed: |mu| + |T(mu)| != (n - q(S)) / 2");
  }
  cand.theta = theta_from_matching;

  cand.bipartite = BipartiteView::from_graph(g, cand.t_mu, s);
  auto bm = bipartite_max_matching(cand.bipartite);
  cand.fair = bm.covers_left;
  cand.mu_prime = Matching(n, bm.matching.edges());
  return cand;
}

Improvement improve_stable_set(const Graph& g, const StableSetCandidate& cand,
                               const VertexSet& t_prime) {
  if (cand.fair) throw ContractViolation("improve_stable_set: candidate is already fair");
  if (t_prime.empty() || !subset_of(t_prime, cand.t_mu)) {
    throw ContractViolation("improve_stable_set: T' must be a non-empty subset of T(mu)");
  }
  const std::size_t n = g.vertex_count();
  const VertexSet& s = cand.s;

  Improvement out;
  out.t_prime_neighborhood = neighbors_within(g, t_prime, s);
  if (out.t_prime_neighborhood.size() >= t_prime.size()) {
    throw ContractViolation("improve_stable_set: T' is not deficient");
  }

  const VertexSet covered = cand.mu.covered();
  std::vector<Vertex> p;
  for (Vertex w : covered) {
    VertexSet single(n, {w});
    if (!subset_of(neighbors_within(g, single, s), out.t_prime_neighborhood)) continue;
    if (!neighbors_within(g, single, t_prime).empty()) continue;
    if (std::none_of(p.begin(), p.end(), [&](Vertex x) { return g.adjacent(x, w); })) {
      p.push_back(w);
    }
  }
  out.p = VertexSet(n, p);

  std::vector<Vertex> members;
  for (Vertex v : s) {
    if (!out.t_prime_neighborhood.contains(v)) members.push_back(v);
  }
  members.insert(members.end(), t_prime.begin(), t_prime.end());
  members.insert(members.end(), p.begin(), p.end());
  out.s1 = VertexSet(n, std::move(members));
  if (!is_stable_set(g, out.s1)) {
    throw InternalError("improve_stable_set: S1 is not stable");
  }
  if (!is_maximal_stable_set(g, out.s1)) {
    auto in = out.s1.mask();
    std::vector<Vertex> grown(out.s1.begin(), out.s1.end());
    for (Vertex v = 0; v < n; ++v) {
      if (in[v]) continue;
      auto nb = g.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w]; })) {
        in[v] = true;
        grown.push_back(v);
      }
    }
    out.s1 = VertexSet(n, std::move(grown));
    out.repaired = true;
  }
  if (out.s1.size() <= s.size()) {
    throw InternalError("improve_stable_set: |S1| <= |S|");
  }
  return out;
}

MmmResult solve_minimum_maximal_matching(const Graph& g, std::size_t cap) {
  MmmResult result;
  result.matching = Matching(g.vertex_count());
  std::optional<Matching> best;

  auto record = [&](const StableSetCandidate& cand) {
    Matching m = cand.mu.merged(cand.mu_prime);
    if (m.size() != cand.theta || !is_maximal_matching(g, m)) {
      throw InternalError("fair candidate did not yield a maximal matching of size theta");
    }
    ++result.stats.fair_records;
    if (!best || smaller_matching(m, *best)) best = std::move(m);
  };

  for_each_maximal_stable_set(g, cap, [&](const VertexSet& s) {
    ++result.stats.stable_sets;
    StableSetCandidate cand = evaluate_stable_set(g, s);
    ++result.stats.candidates_evaluated;
    std::size_t steps = 0;
    while (!cand.fair) {
      auto violator = hall_violator(cand.bipartite, cand.mu_prime);
      if (!violator) throw InternalError("non-fair candidate without a Hall violator");
      Improvement step = improve_stable_set(g, cand, violator->deficient);
      StableSetCandidate next = evaluate_stable_set(g, step.s1);
      ++result.stats.candidates_evaluated;
      ++result.stats.improvement_steps;
      if (step.repaired) ++result.stats.repairs;
      if (next.theta >= cand.theta) {
        throw InternalError("improvement chain did not decrease theta");
      }
      if (++steps > g.vertex_count()) throw InternalError("improvement chain too long");
      cand = std::move(next);
    }
    record(cand);
  });

  if (best) result.matching = std::move(*best);
  return result;
}

Matching minimum_maximal_matching(const Graph& g, std::size_t cap) {
  return solve_minimum_maximal_matching(g, cap).matching;
}

}  // namespace diamdom
