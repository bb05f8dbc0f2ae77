#include "diamdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "diamdom/error.hpp"

namespace diamdom::oracle {
namespace {

using Mask = std::uint64_t;

void guard(const Graph& g, std::size_t limit, const char* who) {
  if (g.vertex_count() > limit) {
    throw ResourceLimit(std::string(who) + ": " + std::to_string(g.vertex_count()) +
                            " vertices exceeds oracle limit " + std::to_string(limit),
                        g.vertex_count());
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> nb(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= Mask{1} << e.v;
    nb[e.v] |= Mask{1} << e.u;
  }
  return nb;
}

Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Visits every t-subset of n bits (Gosper's hack) until `hit` returns true.
template <typename F>
bool any_subset_of_size(std::size_t n, std::size_t t, F hit) {
  if (t == 0) return hit(Mask{0});
  if (t > n) return false;
  Mask m = full(t);
  const Mask limit = full(n);
  while (true) {
    if (hit(m)) return true;
    Mask c = m & -m;
    Mask r = m + c;
    if (r == 0 || r > limit) return false;
    m = (((r ^ m) >> 2) / c) | r;
    if (m > limit) return false;
  }
}

bool stable(const std::vector<Mask>& nb, Mask s) {
  for (Mask rest = s; rest; rest &= rest - 1) {
    if (nb[std::countr_zero(rest)] & s) return false;
  }
  return true;
}

// Calls visit(edges used, covered mask) for every matching of g.
template <typename F>
void each_matching(const Graph& g, F visit) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> picked;
  auto rec = [&](auto& self, std::size_t v, Mask covered) -> void {
    while (v < n && (covered >> v & 1)) ++v;
    if (v == n) {
      visit(picked.size(), covered);
      return;
    }
    self(self, v + 1, covered);
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (w <= v || (covered >> w & 1)) continue;
      picked.emplace_back(static_cast<Vertex>(v), w);
      self(self, v + 1, covered | Mask{1} << v | Mask{1} << w);
      picked.pop_back();
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Guards guards() {
  Guards out;
  if (const char* env = std::getenv("DOMSET_ORACLE_LIMIT")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      std::size_t v = std::min<std::size_t>(value, 63);
      out = Guards{v, v, v, v, v};
    }
  }
  return out;
}

std::size_t gamma_oracle(const Graph& g) {
  guard(g, guards().gamma, "gamma_oracle");
  const std::size_t n = g.vertex_count();
  auto nb = neighbor_masks(g);
  for (std::size_t t = 0; t <= n; ++t) {
    bool found = any_subset_of_size(n, t, [&](Mask d) {
      Mask dominated = d;
      for (Mask rest = d; rest; rest &= rest - 1) dominated |= nb[std::countr_zero(rest)];
      return dominated == full(n);
    });
    if (found) return t;
  }
  return n;
}

std::size_t mmm_oracle(const Graph& g) {
  guard(g, guards().matching, "mmm_oracle");
  std::size_t best = g.vertex_count();
  each_matching(g, [&](std::size_t size, Mask covered) {
    if (size >= best) return;
    for (const Edge& e : g.edges()) {
      if (!(covered >> e.u & 1) && !(covered >> e.v & 1)) return;
    }
    best = size;
  });
  return best;
}

std::size_t max_matching_oracle(const Graph& g) {
  guard(g, guards().matching, "max_matching_oracle");
  std::size_t best = 0;
  each_matching(g, [&](std::size_t size, Mask) { best = std::max(best, size); });
  return best;
}

std::size_t alpha_oracle(const Graph& g) {
  guard(g, guards().alpha, "alpha_oracle");
  const std::size_t n = g.vertex_count();
  auto nb = neighbor_masks(g);
  std::size_t best = 0;
  for (std::size_t t = 1; t <= n; ++t) {
    if (!any_subset_of_size(n, t, [&](Mask s) { return stable(nb, s); })) break;
    best = t;
  }
  return best;
}

std::size_t vertex_cover_oracle(const Graph& g) {
  guard(g, guards().vertex_cover, "vertex_cover_oracle");
  const std::size_t n = g.vertex_count();
  for (std::size_t t = 0; t <= n; ++t) {
    bool found = any_subset_of_size(n, t, [&](Mask c) {
      return std::all_of(g.edges().begin(), g.edges().end(),
                         [&](const Edge& e) { return (c >> e.u & 1) || (c >> e.v & 1); });
    });
    if (found) return t;
  }
  return n;
}

std::vector<VertexSet> mis_oracle(const Graph& g) {
  guard(g, guards().mis, "mis_oracle");
  const std::size_t n = g.vertex_count();
  auto nb = neighbor_masks(g);
  std::vector<VertexSet> out;
  for (Mask s = 0; s <= full(n); ++s) {
    if (!stable(nb, s)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if (!(s >> v & 1) && !(nb[v] & s)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (s >> v & 1) members.push_back(static_cast<Vertex>(v));
    }
    out.emplace_back(n, std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace diamdom::oracle
