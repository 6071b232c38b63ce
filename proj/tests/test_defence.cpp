#include <gtest/gtest.h>

#include <sstream>

#include "recon/attack.hpp"
#include "recon/defence.hpp"
#include "recon/linalg.hpp"
#include "support.hpp"

namespace recon {
namespace {

using testing::brute_force_cycle_through;
using testing::cycle_graph;
using testing::graph_from_bits;
using testing::random_forest;

TEST(Certify, Examples) {
  const auto six = certify(cycle_graph(6));
  EXPECT_EQ(six.max_safe_k, 2U);
  EXPECT_TRUE(six.covers(2));
  EXPECT_FALSE(six.covers(3));
  EXPECT_EQ(certify(cycle_graph(25)).max_safe_k, 12U);
  EXPECT_EQ(certify(cycle_graph(3)).max_safe_k, 1U);

  Rng rng(1);
  const auto tree = certify(random_forest(30, rng, 1.0));
  EXPECT_FALSE(tree.max_safe_k);
  EXPECT_TRUE(tree.covers(1000));
}

TEST(Certify, TwiceTheSafeBoundStaysBelowTheGirth) {
  for (std::size_t g = 3; g <= 30; ++g) {
    const auto c = certify(cycle_graph(g));
    ASSERT_LT(2 * *c.max_safe_k, g);
    ASSERT_GE(2 * (*c.max_safe_k + 1), g);
  }
}

TEST(Certify, StretchedRandomGraphResistsQuarterCollusions) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const auto g = stretch_to_girth(erdos_renyi(50, 0.5, rng), 25, rng);
    const auto c = certify(g);
    ASSERT_TRUE(!c.max_safe_k || *c.max_safe_k >= 12);
    ASSERT_TRUE(c.covers(12));
  }
}

TEST(Certify, FingerprintTracksContent) {
  auto g = cycle_graph(6);
  const auto before = fingerprint(g);
  EXPECT_EQ(before, fingerprint(cycle_graph(6)));
  g.remove_edge(0, 1);
  g.add_edge(0, 2);
  const auto after = fingerprint(g);
  EXPECT_EQ(after.edges, before.edges);
  EXPECT_NE(after.hash, before.hash);
}

TEST(AdversarySets, OneOutsideNeighbourIsInvalid) {
  Graph g(6);
  for (const auto& [u, v] : {std::pair{2, 1}, {2, 3}, {2, 4}, {2, 5}, {4, 5}, {5, 3}, {5, 6}}) {
    g.add_edge(u - 1, v - 1);
  }
  EXPECT_TRUE(valid_adversary_set(g, {1, 3, 4}));
  g.remove_edge(1, 2);
  EXPECT_FALSE(valid_adversary_set(g, {1, 3, 4}));
}

TEST(AdversarySets, SamplesAreValid) {
  Rng rng(2);
  const auto g = erdos_renyi(20, 0.2, rng);
  for (int i = 0; i < 200; ++i) {
    const auto set = sample_adversary_set(g, 4, rng, 100000);
    ASSERT_TRUE(set);
    ASSERT_EQ(set->size(), 4U);
    ASSERT_TRUE(valid_adversary_set(g, *set));
  }
  EXPECT_FALSE(sample_adversary_set(g, 21, rng, 10));
}

TEST(Verify, SixCycle) {
  Rng rng(3);
  const auto safe = verify_no_partial_solutions(cycle_graph(6), 2, 200, 200, rng);
  EXPECT_EQ(safe.trials_run, 200U);
  EXPECT_EQ(safe.solutions_found, 0U);
  const auto leaky = verify_no_partial_solutions(cycle_graph(6), 3, 50, 500, rng);
  EXPECT_EQ(leaky.trials_run, 50U);
  EXPECT_GT(leaky.trials_with_solutions, 0U);
}

TEST(Verify, AcyclicGraphsNeverLeak) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_forest(15, rng);
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto report = verify_no_partial_solutions(g, k, 3, 100, rng, 10000);
      ASSERT_EQ(report.solutions_found, 0U);
    }
  }
}

TEST(Verify, GirthAboveTwiceTheCollusionNeverLeaks) {
  Rng rng(5);
  std::size_t trials = 0;
  for (int graph = 0; graph < 60; ++graph) {
    auto g = erdos_renyi(16, 0.25, rng);
    const auto gi = girth(g);
    if (!gi.is_finite()) {
      continue;
    }
    const std::size_t k_max = (gi.value() - 1) / 2;
    for (std::size_t k = 1; k <= k_max; ++k) {
      const auto report = verify_no_partial_solutions(g, k, 5, 150, rng, 100000);
      ASSERT_EQ(report.solutions_found, 0U) << "girth " << gi.value() << " k " << k;
      trials += report.trials_run;
    }
  }
  EXPECT_GT(trials, 0U);
}

TEST(Flood, DetectsExactlyTheNodesOnShortCycles) {
  // All graphs on five and six nodes.
  for (std::size_t n : {5U, 6U}) {
    const unsigned long long pairs = n * (n - 1) / 2;
    for (unsigned long long code = 0; code < (1ULL << pairs); ++code) {
      const auto g = graph_from_bits(n, code);
      for (NodeId v = 0; v < n; ++v) {
        const auto shortest = brute_force_cycle_through(g, v);
        for (std::size_t ell = 3; ell <= n; ++ell) {
          const auto outcome = flood(g, v, ell, 1);
          const bool expected = shortest && *shortest <= ell;
          ASSERT_EQ(outcome.returned_on.has_value(), expected)
              << "n " << n << " code " << code << " v " << v << " ell " << ell;
          if (outcome.returned_on) {
            const auto e = *outcome.returned_on;
            ASSERT_TRUE(g.has_edge(e.u, e.v));
            ASSERT_TRUE(e.u == v || e.v == v);
          }
        }
      }
    }
  }
}

TEST(Flood, RandomEightNodeGraphs) {
  Rng rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = erdos_renyi(8, 0.35, rng);
    for (NodeId v = 0; v < 8; ++v) {
      const auto shortest = brute_force_cycle_through(g, v);
      for (std::size_t ell = 3; ell <= 8; ++ell) {
        ASSERT_EQ(flood(g, v, ell, 7).returned_on.has_value(), shortest && *shortest <= ell);
      }
    }
  }
}

TEST(Flood, PendantNodeIsNotOnTheTriangle) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  EXPECT_FALSE(flood(g, 3, 6, 1).returned_on);
  EXPECT_TRUE(flood(g, 2, 3, 1).returned_on);
}

TEST(BreakShortCycles, Examples) {
  Rng rng(7);
  const auto path = break_short_cycles(cycle_graph(3), 3, rng);
  EXPECT_EQ(path.edge_count(), 2U);
  EXPECT_TRUE(is_connected(path));
  EXPECT_EQ(break_short_cycles(cycle_graph(6), 5, rng), cycle_graph(6));
  EXPECT_THROW(break_short_cycles(cycle_graph(6), 2, rng), std::invalid_argument);
}

TEST(BreakShortCycles, RandomGraphsReachGirthAboveTheLimit) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto g = erdos_renyi(30, 0.3, rng);
    CycleBreakingStats stats;
    const auto out = break_short_cycles(g, 6, rng, &stats);
    ASSERT_TRUE(girth(out).exceeds(6));
    ASSERT_EQ(component_labels(out), component_labels(g));
    ASSERT_EQ(stats.removed_edges, g.edge_count() - out.edge_count());
    ASSERT_GE(stats.passes, 1U);
  }
}

}  // namespace
}  // namespace recon
