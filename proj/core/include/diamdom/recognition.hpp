#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "diamdom/graph.hpp"
#include "diamdom/pattern.hpp"

namespace diamdom {

/// A failed class flag together with the induced occurrence that refutes it.
struct ClassWitness {
  std::string_view flag;
  PatternName pattern;
  Occurrence occurrence;
};

struct ClassReport {
  Distance diameter;
  Distance girth;
  bool triangle_free = true;
  bool c4_free = true;
  bool c5_free = true;
  bool claw_free = true;
  bool k14_free = true;
  bool two_k2_free = true;
  bool split = true;
  bool line_graph = true;
  /// One entry per false flag, in the flag order above.
  std::vector<ClassWitness> witnesses;

  /// Witness of the first failed flag, or nullptr if every flag holds.
  const ClassWitness* witness() const {
    return witnesses.empty() ? nullptr : &witnesses.front();
  }
};

/// Computes every flag by induced-pattern search. The split flag is also
/// derived from the degree sequence and the two routes must agree
/// (InternalError otherwise).
ClassReport classify(const Graph& g);

struct SplitPartition {
  VertexSet clique;
  VertexSet stable;
};

/// Clique/stable partition from the degree sequence (Hammer-Simeone), or
/// nullopt when `g` is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

struct LineGraph {
  Graph graph;
  /// Vertex i of `graph` is edge `edge_of[i]` of the source, in canonical edge order.
  std::vector<Edge> edge_of;
};

LineGraph line_graph_of(const Graph& g);

struct RootGraph {
  Graph root;
  /// Vertex i of the line graph corresponds to root edge `edge_of[i]`.
  std::vector<Edge> edge_of;
};

/// Reconstructs G with L(G) = l under the returned vertex/edge map, or
/// nullopt when `l` is not a line graph.
///
/// Works by searching for a Krausz partition: edge-disjoint cliques covering
/// every edge with each vertex in at most two of them. For K3 the root is
/// K_{1,3}. The result is checked by rebuilding the line graph through the
/// map. Throws ContractViolation on an empty or disconnected input.
std::optional<RootGraph> root_graph(const Graph& l);

/// Exact isomorphism test by colour refinement plus backtracking.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace diamdom
