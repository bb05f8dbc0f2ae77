#include "diamdom/pattern.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "diamdom/error.hpp"

namespace diamdom {
namespace {

struct PatternSpec {
  PatternName name;
  std::string_view label;
  std::size_t n;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

const std::vector<PatternSpec>& specs() {
  static const std::vector<PatternSpec> table = {
      {PatternName::claw, "claw", 4, {{0, 1}, {0, 2}, {0, 3}}},
      {PatternName::k14, "K14", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
      {PatternName::two_k2, "2K2", 4, {{0, 1}, {2, 3}}},
      {PatternName::c3, "C3", 3, {{0, 1}, {1, 2}, {0, 2}}},
      {PatternName::c4, "C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {PatternName::c5, "C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
      {PatternName::c6, "C6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}},
      {PatternName::p4, "P4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      // Minimal non-line graphs, ordered by (order, size).
      {PatternName::f1, "F1", 4, {{0, 3}, {1, 3}, {2, 3}}},
      {PatternName::f2, "F2", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}}},
      {PatternName::f3, "F3", 5,
       {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
      {PatternName::f4, "F4", 6, {{0, 1}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}},
      {PatternName::f5, "F5", 6,
       {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}},
      {PatternName::f6, "F6", 6,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {4, 5}}},
      {PatternName::f7, "F7", 6,
       {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}},
      {PatternName::f8, "F8", 6,
       {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}},
      {PatternName::f9, "F9", 6,
       {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {3, 5},
        {4, 5}}},
  };
  return table;
}

const PatternSpec& spec_of(PatternName name) {
  for (const auto& s : specs()) {
    if (s.name == name) return s;
  }
  throw ContractViolation("unknown pattern");
}

class InducedSearch {
 public:
  InducedSearch(const Graph& host, const Graph& pat) : host_(host), pat_(pat) {
    order_.resize(pat.vertex_count());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pat.degree(a) > pat.degree(b);
    });
    // For each position, the earliest already-placed pattern neighbor (if any)
    // narrows host candidates to that image's neighbor list.
    anchor_.assign(order_.size(), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (pat.adjacent(order_[i], order_[j])) {
          anchor_[i] = static_cast<int>(j);
          break;
        }
      }
    }
    image_.assign(order_.size(), 0);
    used_.assign(host.vertex_count(), false);
  }

  std::optional<Occurrence> run() {
    if (pat_.vertex_count() > host_.vertex_count()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    Occurrence occ(pat_.vertex_count());
    for (std::size_t i = 0; i < order_.size(); ++i) occ[order_[i]] = image_[i];
    return occ;
  }

 private:
  bool fits(std::size_t pos, Vertex h) const {
    if (used_[h] || host_.degree(h) < pat_.degree(order_[pos])) return false;
    for (std::size_t j = 0; j < pos; ++j) {
      if (pat_.adjacent(order_[pos], order_[j]) != host_.adjacent(h, image_[j])) return false;
    }
    return true;
  }

  bool place(std::size_t pos, Vertex h) {
    if (!fits(pos, h)) return false;
    image_[pos] = h;
    used_[h] = true;
    if (extend(pos + 1)) return true;
    used_[h] = false;
    return false;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    if (anchor_[pos] >= 0) {
      for (Vertex h : host_.neighbors(image_[anchor_[pos]])) {
        if (place(pos, h)) return true;
      }
      return false;
    }
    for (Vertex h = 0; h < host_.vertex_count(); ++h) {
      if (place(pos, h)) return true;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<Vertex> order_;
  std::vector<int> anchor_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::string_view to_string(PatternName name) { return spec_of(name).label; }

std::optional<PatternName> pattern_from_string(std::string_view text) {
  for (const auto& s : specs()) {
    if (s.label == text) return s.name;
  }
  return std::nullopt;
}

const Pattern& pattern(PatternName name) {
  static const std::vector<Pattern> patterns = [] {
    std::vector<Pattern> out;
    for (const auto& s : specs()) {
      std::vector<Edge> edges;
      for (auto [a, b] : s.edges) edges.push_back(make_edge(a, b));
      out.push_back({s.name, Graph(s.n, edges)});
    }
    return out;
  }();
  return patterns.at(static_cast<std::size_t>(name));
}

std::span<const PatternName> line_graph_obstructions() {
  static constexpr std::array<PatternName, 9> family = {
      PatternName::f1, PatternName::f2, PatternName::f3, PatternName::f4, PatternName::f5,
      PatternName::f6, PatternName::f7, PatternName::f8, PatternName::f9};
  return family;
}

std::optional<Occurrence> contains_induced(const Graph& g, const Pattern& p,
                                           PatternSearchOptions options) {
  if (p.graph.vertex_count() > options.max_pattern_vertices) {
    throw UnsupportedPattern("pattern " + std::string(to_string(p.name)) + " has " +
                             std::to_string(p.graph.vertex_count()) +
                             " vertices, cap is " + std::to_string(options.max_pattern_vertices));
  }
  return InducedSearch(g, p.graph).run();
}

std::optional<Occurrence> contains_induced(const Graph& g, PatternName name) {
  return contains_induced(g, pattern(name));
}

bool is_induced_occurrence(const Graph& g, const Pattern& p, std::span<const Vertex> occurrence) {
  const std::size_t k = p.graph.vertex_count();
  if (occurrence.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (occurrence[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (occurrence[i] == occurrence[j]) return false;
      if (p.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) !=
          g.adjacent(occurrence[i], occurrence[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace diamdom
