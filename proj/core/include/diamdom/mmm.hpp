#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "diamdom/graph.hpp"
#include "diamdom/matching.hpp"

namespace diamdom {

/// Enumeration cap for graphs the caller knows to be 2K2-free: n(n-1)/2 + 1.
std::size_t two_k2_free_stable_set_cap(const Graph& g);
/// Cap used when nothing is known about the input.
inline constexpr std::size_t kDefaultStableSetCap = 1'000'000;

/// Calls `visit` once per maximal stable set of `g`, in a fixed order.
///
/// Bron-Kerbosch with Tomita pivoting run on the complement. Throws
/// ResourceLimit (count = cap) as soon as a (cap+1)-th set is found.
void for_each_maximal_stable_set(const Graph& g, std::size_t cap,
                                 const std::function<void(const VertexSet&)>& visit);
std::vector<VertexSet> enumerate_maximal_stable_sets(const Graph& g, std::size_t cap);

/// A maximal stable set S together with the matching data built from it.
struct StableSetCandidate {
  VertexSet s;
  /// Maximum matching of G - S, in host ids.
  Matching mu;
  /// Vertices of V \ S left uncovered by mu. Always a stable set.
  VertexSet t_mu;
  /// |mu| + |t_mu| = (n - |s| + |t_mu|) / 2.
  std::size_t theta = 0;
  /// B_S(mu) has a matching covering t_mu.
  bool fair = false;
  /// Bipartite graph between t_mu (left) and s (right).
  BipartiteView bipartite;
  /// Maximum matching of `bipartite`; covers t_mu iff fair.
  Matching mu_prime;
};

/// Throws ContractViolation if `s` is not a maximal stable set of `g`, and
/// InternalError if the two expressions for theta disagree.
StableSetCandidate evaluate_stable_set(const Graph& g, const VertexSet& s);

struct Improvement {
  /// (S \ N(T')) ∪ T' ∪ P, extended to a maximal stable set if needed.
  VertexSet s1;
  VertexSet p;
  VertexSet t_prime_neighborhood;
  /// Greedy extension was needed to make s1 maximal.
  bool repaired = false;
};

/// One step of the improvement chain for a non-fair candidate.
///
/// `t_prime` must be a deficient subset of cand.t_mu (|N(T')| < |T'|),
/// normally the output of hall_violator. P is built greedily in ascending id
/// from the mu-covered vertices w with N(w) ∩ S ⊆ N(T') and N(w) ∩ T' = ∅.
/// Throws ContractViolation for a fair candidate or a non-deficient T', and
/// InternalError if |S1| <= |S|.
Improvement improve_stable_set(const Graph& g, const StableSetCandidate& cand,
                               const VertexSet& t_prime);

struct MmmStats {
  std::size_t stable_sets = 0;
  std::size_t candidates_evaluated = 0;
  std::size_t improvement_steps = 0;
  std::size_t repairs = 0;
  std::size_t fair_records = 0;
};

struct MmmResult {
  Matching matching;
  MmmStats stats;
};

/// Minimum maximal matching through maximal stable sets.
///
/// For each maximal stable set S: evaluate; while not fair, follow
/// S -> S1 -> ... (each strictly larger, theta strictly smaller) until fair.
/// Every fair candidate yields the maximal matching mu ∪ mu' of size theta;
/// the smallest by (size, edge list) is returned. Exact whenever the number
/// of maximal stable sets is at most `cap` (e.g. every 2K2-free graph with
/// the 2K2-free cap). Throws ResourceLimit when the cap is exceeded.
MmmResult solve_minimum_maximal_matching(const Graph& g, std::size_t cap = kDefaultStableSetCap);
Matching minimum_maximal_matching(const Graph& g, std::size_t cap = kDefaultStableSetCap);

}  // namespace diamdom
