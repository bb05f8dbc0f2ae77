#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "diamdom/graph.hpp"
#include "diamdom/mmm.hpp"

namespace diamdom {

enum class Method { exact, bounded, line_diam2, girth5_diam2, clawfree_diam2, fallback_exact };

std::string_view to_string(Method m);

/// A dominating set of the host graph. Solvers only return verified certificates.
struct DominationCertificate {
  VertexSet set;
  std::size_t gamma = 0;
  Method method = Method::exact;
};

bool is_dominating_set(const Graph& g, const VertexSet& s);

struct ExactOptions {
  /// Search nodes before giving up with ResourceLimit; 0 means unlimited.
  std::size_t node_limit = 0;
};

/// Minimum dominating set by branch and bound.
///
/// Branches on the undominated vertex with the smallest closed neighborhood,
/// skipping candidates whose new coverage is contained in another's. Upper
/// bound from greedy; lower bound is the max of a closed-neighborhood packing,
/// a fractional coverage bound and ceil(|undominated| / max gain). When the
/// node limit is hit, throws ResourceLimit carrying the best size found.
DominationCertificate gamma_exact(const Graph& g, ExactOptions options = {});

/// Smallest dominating set of size <= budget by exhaustive subset search in
/// increasing size, or nullopt when none exists.
std::optional<DominationCertificate> gamma_bounded(const Graph& g, std::size_t budget);

struct SimplicialReduction {
  Graph graph;
  /// Removed vertices, in host ids.
  VertexSet removed;
  /// Host id of each vertex of `graph`.
  std::vector<Vertex> to_host;
};

/// Repeatedly deletes a simplicial v having some u != v with
/// ∅ != N(u) ⊆ N(v); the domination number is unchanged at every step.
/// Pairs are scanned by ascending v, then ascending u.
SimplicialReduction simplicial_reduce(const Graph& g);

/// Girth 5 and diameter 2: returns N(v) for the smallest v; its size is Δ.
///
/// Throws ClassMismatch when the preconditions fail and InternalError if the
/// graph is not Δ-regular or two non-adjacent vertices do not have exactly one
/// common closed neighbor.
DominationCertificate gamma_girth5_diam2(const Graph& g);

/// Line graphs with diameter at most 2: rebuild the root, take a minimum
/// maximal matching there and map its edges back to vertices of `l`.
/// Throws ClassMismatch for non-line graphs or diameter > 2.
DominationCertificate gamma_line_diam2(const Graph& l);

enum class ClawFreeStep { small_gamma, line_graph, fallback };

struct ClawFreeResult {
  DominationCertificate certificate;
  ClawFreeStep step = ClawFreeStep::small_gamma;
  /// Vertices deleted by the adjacent-pair neighborhood reduction.
  std::size_t removed_vertices = 0;
};

/// Claw-free graphs with diameter at most 2.
///
/// 1. Subsets of size <= 3 (covers W-joins).
/// 2. Delete u while some adjacent v has N(u) \ {v} ⊆ N(v) \ {u}; the
///    diameter is re-checked after every deletion.
/// 3. If what remains is a line graph, solve it with gamma_line_diam2 and
///    check the set against the original graph.
/// 4. Otherwise (proper circular-arc branch) fall back to gamma_exact.
/// Throws ClassMismatch unless `g` is claw-free with diameter <= 2.
ClawFreeResult solve_clawfree_diam2(const Graph& g, ExactOptions fallback = {});
DominationCertificate gamma_clawfree_diam2(const Graph& g);

}  // namespace diamdom
