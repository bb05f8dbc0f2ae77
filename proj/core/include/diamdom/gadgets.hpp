#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diamdom/domination.hpp"
#include "diamdom/graph.hpp"
#include "diamdom/recognition.hpp"

namespace diamdom {

enum class ReductionKind { cubic_clawfree, vc_k14, split_trianglefree };

std::string_view to_string(ReductionKind kind);
/// Accepts "cubic-clawfree", "vc-k14", "split-trianglefree" and the
/// underscore spellings. Throws ContractViolation otherwise.
ReductionKind reduction_kind_from_string(std::string_view s);

/// Where a vertex of G' comes from: a role tag and the source vertices it copies.
struct Provenance {
  std::string role;
  std::vector<Vertex> source;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ReductionInstance {
  Graph gprime;
  std::size_t kprime = 0;
  ReductionKind kind = ReductionKind::cubic_clawfree;
  std::size_t k = 0;
  /// Target diameter (cubic only; 2 for the other kinds).
  std::size_t d = 2;
  /// One entry per vertex of gprime; source ids refer to the caller's graph.
  std::vector<Provenance> provenance;
  /// Graph the gadget was built from. Differs from the input only when the
  /// split reduction had to apply simplicial reductions first.
  Graph source_used;
  /// Caller id of each vertex of source_used.
  std::vector<Vertex> source_ids;
  std::vector<std::string> notices;
};

/// Dominating Set on cubic graphs to claw-free graphs of diameter d >= 3.
///
/// Each vertex v becomes a 12-vertex gadget: outer o1..o3, an inner C6
/// x1..x6 and grey g1..g3 with triangles {g_i, x_{2i-1}, x_{2i}} and o_i
/// adjacent to that triangle. All greys plus a hub s form a clique. For d = 3
/// a leaf t hangs off s. For d >= 4 a path t0..t_{d-3} hangs off s instead,
/// and when d is a multiple of 3 a vertex q adjacent to t0 and t1 is added so
/// the tail costs exactly floor(d/3). Outer o_i of v is joined to the outer
/// vertex of the i-th neighbor (ascending id) that points back at v.
/// k' = 2n + k + 1, plus floor(d/3) when d >= 4.
///
/// Throws ClassMismatch when g is not connected and cubic, ContractViolation
/// when d < 3, and InternalError if the built graph fails its structural
/// checks (claw-free, diameter d, inner C6, one external neighbor per outer).
ReductionInstance reduce_cubic_clawfree(const Graph& g, std::size_t k, std::size_t d);

/// Vertex Cover to Dominating Set on K_{1,4}-free graphs of diameter 2, k' = k.
///
/// V1 holds a copy of every vertex, E1 and E2 a copy of every edge; u1 is a
/// clique with its incident E1 copies and, separately, with its incident E2
/// copies; V1 ∪ S ∪ {s} is a clique; every pair of edge copies with disjoint
/// source edges gets its own vertex of S adjacent to both.
/// Throws ClassMismatch on an edgeless graph and InternalError if G' is not
/// K_{1,4}-free with diameter 2.
ReductionInstance reduce_vc_k14(const Graph& g, std::size_t k);

/// Dominating Set on split graphs of diameter 2 to triangle-free graphs of
/// diameter 2, k' = k + 1.
///
/// Runs simplicial_reduce first (recorded in `notices`). Builds K1, S1, S2,
/// t complete to K1, s complete to S2, edge st, u1v1 for uv in E, u1v2 for uv
/// not in E, and v1v2 for v in S.
/// Throws ClassMismatch if `partition` is not a clique/stable partition of g
/// or the (reduced) graph does not have diameter 2, and InternalError if G'
/// is not triangle-free with diameter 2.
ReductionInstance reduce_split_trianglefree(const Graph& g, const SplitPartition& partition,
                                            std::size_t k);

/// Constructive map from a source solution to a solution of G'.
///
/// cubic: a dominating set D of source_used -> s, o1..o3 of every v in D, an
/// inner pair for every other vertex, and the tail dominators.
/// vc_k14: a vertex cover C -> its copy in V1.
/// split_trianglefree: a dominating set D of source_used -> its copies in
/// K1 ∪ S1 plus t.
/// `solution` is over source_used. Throws ContractViolation if it is not a
/// dominating set (vertex cover for vc_k14).
VertexSet forward_witness(const ReductionInstance& inst, const VertexSet& solution);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReductionReport {
  std::vector<CheckResult> checks;
  /// gamma(source) or VC(source).
  std::optional<std::size_t> source_value;
  std::optional<std::size_t> target_gamma;
  /// True when the exact search on G' hit its node limit; the equivalence
  /// check is then missing.
  bool incomplete = false;

  bool passed() const;
};

struct VerifyOptions {
  /// Node limit for the branch and bound on G'; 0 means unlimited.
  std::size_t node_limit = 0;
};

/// Structural, forward and (when the searches finish) equivalence checks.
///
/// Source values come from the brute-force oracles, gamma(G') from
/// gamma_oracle when small enough and gamma_exact otherwise. `source` must
/// be the graph the instance was built from.
ReductionReport verify_reduction(const ReductionInstance& inst, const Graph& source,
                                 VerifyOptions options = {});

}  // namespace diamdom
