#include <gtest/gtest.h>

#include <algorithm>
#include <optional>

#include "corpus.hpp"
#include "diamdom/error.hpp"
#include "diamdom/mmm.hpp"
#include "diamdom/oracle.hpp"

namespace {

using namespace diamdom;

TEST(MaximalStableSets, Examples) {
  EXPECT_EQ(enumerate_maximal_stable_sets(graphs::cycle(4), 10),
            (std::vector<VertexSet>{VertexSet(4, {0, 2}), VertexSet(4, {1, 3})}));
  auto p3 = enumerate_maximal_stable_sets(graphs::path(3), 10);
  std::sort(p3.begin(), p3.end());
  EXPECT_EQ(p3, (std::vector<VertexSet>{VertexSet(3, {0, 2}), VertexSet(3, {1})}));
  auto c5 = enumerate_maximal_stable_sets(graphs::cycle(5), 10);
  EXPECT_EQ(c5.size(), 5u);
  for (const auto& s : c5) EXPECT_EQ(s.size(), 2u);
}

TEST(MaximalStableSets, MatchesOracle) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      auto sets = enumerate_maximal_stable_sets(g, kDefaultStableSetCap);
      std::sort(sets.begin(), sets.end());
      EXPECT_EQ(sets, oracle::mis_oracle(g));
    }
  }
}

TEST(MaximalStableSets, CapThrows) {
  EXPECT_THROW(enumerate_maximal_stable_sets(graphs::cycle(5), 4), ResourceLimit);
  EXPECT_NO_THROW(enumerate_maximal_stable_sets(graphs::cycle(5), 5));
}

TEST(MaximalStableSets, TwoK2FreeBound) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      if (corpus::has_induced_2k2(g)) continue;
      EXPECT_LE(oracle::mis_oracle(g).size(), n * (n - 1) / 2);
    }
  }
}

TEST(EvaluateStableSet, Examples) {
  auto p4 = evaluate_stable_set(graphs::path(4), VertexSet(4, {0, 3}));
  EXPECT_EQ(p4.mu, Matching(4, {{1, 2}}));
  EXPECT_TRUE(p4.t_mu.empty());
  EXPECT_EQ(p4.theta, 1u);
  EXPECT_TRUE(p4.fair);

  auto c4 = evaluate_stable_set(graphs::cycle(4), VertexSet(4, {0, 2}));
  EXPECT_TRUE(c4.mu.empty());
  EXPECT_EQ(c4.t_mu, VertexSet(4, {1, 3}));
  EXPECT_EQ(c4.theta, 2u);
  EXPECT_TRUE(c4.fair);
  EXPECT_EQ(c4.mu_prime.size(), 2u);

  auto k3 = evaluate_stable_set(graphs::complete(3), VertexSet(3, {0}));
  EXPECT_EQ(k3.mu, Matching(3, {{1, 2}}));
  EXPECT_EQ(k3.theta, 1u);
  EXPECT_TRUE(k3.fair);
}

TEST(EvaluateStableSet, RejectsNonMaximalSets) {
  EXPECT_THROW(evaluate_stable_set(graphs::path(4), VertexSet(4, {0})), ContractViolation);
  EXPECT_THROW(evaluate_stable_set(graphs::path(4), VertexSet(4, {0, 1})), ContractViolation);
}

struct NonFair {
  Graph g;
  StableSetCandidate cand;
};

// First non-fair candidate over graphs of increasing order.
std::optional<NonFair> smallest_non_fair() {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      for (const auto& s : enumerate_maximal_stable_sets(g, kDefaultStableSetCap)) {
        auto c = evaluate_stable_set(g, s);
        if (!c.fair) return NonFair{g, c};
      }
    }
  }
  return std::nullopt;
}

TEST(ImproveStableSet, SmallestNonFairInstanceIsP3) {
  auto found = smallest_non_fair();
  ASSERT_TRUE(found);
  const Graph& g = found->g;
  const auto& cand = found->cand;
  // The path a-c-b with S = {c}: G - S is two isolated vertices, both must be
  // matched into the single vertex c.
  ASSERT_EQ(g.vertex_count(), 3u);
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(cand.s.size(), 1u);
  EXPECT_EQ(cand.t_mu.size(), 2u);
  EXPECT_EQ(cand.theta, 2u);

  auto h = hall_violator(cand.bipartite, cand.mu_prime);
  ASSERT_TRUE(h);
  Improvement imp = improve_stable_set(g, cand, h->deficient);
  EXPECT_EQ(imp.s1, cand.t_mu);
  EXPECT_GT(imp.s1.size(), cand.s.size());
  auto next = evaluate_stable_set(g, imp.s1);
  EXPECT_LT(next.theta, cand.theta);
  EXPECT_TRUE(next.fair);
}

TEST(ImproveStableSet, RejectsFairCandidatesAndNonDeficientSets) {
  auto fair = evaluate_stable_set(graphs::path(4), VertexSet(4, {0, 3}));
  EXPECT_THROW(improve_stable_set(graphs::path(4), fair, VertexSet(4)), ContractViolation);

  Graph p3(3, {{0, 2}, {1, 2}});
  auto cand = evaluate_stable_set(p3, VertexSet(3, {2}));
  ASSERT_FALSE(cand.fair);
  EXPECT_THROW(improve_stable_set(p3, cand, VertexSet(3, {0})), ContractViolation);
}

TEST(ImproveStableSet, EveryStepShrinksThetaOnSmallGraphs) {
  std::size_t steps = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      for (const auto& s : enumerate_maximal_stable_sets(g, kDefaultStableSetCap)) {
        auto cand = evaluate_stable_set(g, s);
        while (!cand.fair) {
          auto h = hall_violator(cand.bipartite, cand.mu_prime);
          ASSERT_TRUE(h);
          auto imp = improve_stable_set(g, cand, h->deficient);
          auto next = evaluate_stable_set(g, imp.s1);
          ASSERT_GT(imp.s1.size(), cand.s.size());
          ASSERT_LT(next.theta, cand.theta);
          cand = next;
          ++steps;
        }
      }
    }
  }
  EXPECT_GT(steps, 0u);
}

TEST(MinimumMaximalMatching, Examples) {
  Matching p4 = minimum_maximal_matching(graphs::path(4));
  EXPECT_EQ(p4, Matching(4, {{1, 2}}));
  EXPECT_EQ(minimum_maximal_matching(graphs::cycle(5)).size(), 2u);
  EXPECT_EQ(minimum_maximal_matching(graphs::star(3)).size(), 1u);
  EXPECT_EQ(minimum_maximal_matching(Graph(2)).size(), 0u);
}

TEST(MinimumMaximalMatching, ResultIsMaximalAndMatchesOracle) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      Matching m = minimum_maximal_matching(g);
      ASSERT_TRUE(is_valid_matching(g, m));
      ASSERT_TRUE(is_maximal_matching(g, m));
      EXPECT_EQ(m.size(), oracle::mmm_oracle(g));
    }
  }
}

TEST(MinimumMaximalMatching, CapIsEnforced) {
  EXPECT_THROW(minimum_maximal_matching(graphs::cycle(7), 3), ResourceLimit);
  EXPECT_EQ(two_k2_free_stable_set_cap(graphs::complete(5)), 11u);
}

}  // namespace
