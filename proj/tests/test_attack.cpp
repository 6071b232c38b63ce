#include <gtest/gtest.h>

#include <sstream>

#include "recon/attack.hpp"
#include "recon/csv.hpp"
#include "recon/linalg.hpp"

namespace recon {
namespace {

AdversaryView triangle_view() {
  return AdversaryView({0, 1, 2}, {3, 4, 5},
                       {{true, true, false}, {true, false, true}, {false, true, true}});
}

TEST(Admissible, Boundaries) {
  EXPECT_TRUE(admissible({3, 3, 9}));
  EXPECT_TRUE(admissible({3, 3, 3}));
  EXPECT_FALSE(admissible({3, 3, 2}));   // a neighbour would have no edge
  EXPECT_FALSE(admissible({3, 3, 10}));  // more edges than cells
  EXPECT_FALSE(admissible({3, 1, 2}));   // every active adversary needs two neighbours
  EXPECT_FALSE(admissible({1, 2, 3}));
  EXPECT_TRUE(admissible({1, 2, 2}));
  EXPECT_FALSE(admissible({0, 2, 2}));
}

TEST(SampleView, CompleteBipartite) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto view = sample_view({3, 3, 9}, rng);
    ASSERT_TRUE(view);
    EXPECT_EQ(view->edge_count(), 9U);
    EXPECT_EQ(reconstructed_count(*view), 0U);
  }
}

TEST(SampleView, InadmissibleFailsFast) {
  Rng rng(2);
  EXPECT_FALSE(sample_view({3, 3, 2}, rng));
  EXPECT_FALSE(sample_view({3, 3, 2}, rng, 10));
}

TEST(SampleView, EverySampleHonoursTheFilters) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const auto view = sample_view({3, 5, 10}, rng);
    ASSERT_TRUE(view);
    ASSERT_EQ(view->edge_count(), 10U);
    for (std::size_t c = 0; c < 3; ++c) {
      ASSERT_NE(view->adversary_degree(c), 1U);  // no adversary with one edge
    }
    for (std::size_t nu = 0; nu < 5; ++nu) {
      ASSERT_GE(view->neighbour_degree(nu), 1U);  // no neighbour without edges
    }
    ASSERT_TRUE(passes_filters(*view));
  }
}

TEST(SampleView, PermittedShapesDoOccur) {
  // Zero-edge adversaries, one-edge neighbours and disconnected views are kept.
  Rng rng(4);
  bool idle_adversary = false;
  bool pendant_neighbour = false;
  for (int i = 0; i < 2000; ++i) {
    const auto view = sample_view({3, 4, 5}, rng);
    ASSERT_TRUE(view);
    for (std::size_t c = 0; c < 3; ++c) {
      idle_adversary |= view->adversary_degree(c) == 0;
    }
    for (std::size_t nu = 0; nu < 4; ++nu) {
      pendant_neighbour |= view->neighbour_degree(nu) == 1;
    }
  }
  EXPECT_TRUE(idle_adversary);
  EXPECT_TRUE(pendant_neighbour);
}

TEST(ReconstructedCount, Examples) {
  EXPECT_EQ(reconstructed_count(triangle_view()), 3U);
  EXPECT_EQ(reconstructed_count(AdversaryView({0}, {1, 2, 3}, {{true, true, true}})), 0U);
  const AdversaryView complete({0, 1, 2}, {3, 4, 5}, std::vector(3, std::vector(3, true)));
  EXPECT_EQ(reconstructed_count(complete), 0U);
}

TEST(ReconstructedCount, AgreesWithFullRref) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const auto view = sample_view({4, 6, 12}, rng);
    ASSERT_TRUE(view);
    ASSERT_EQ(reconstructed_count(*view), solvable_variables(view->biadjacency_matrix()).size());
  }
}

TEST(RoundsUntilSuccess, ThreeSummationsWithoutUpdates) {
  // Find a seed whose first three wake-ups are the three adversaries.
  for (std::uint64_t seed = 0; seed < 100000; ++seed) {
    Rng probe(seed);
    std::uniform_int_distribution<std::size_t> wake(0, 5);
    std::set<std::size_t> first{wake(probe), wake(probe), wake(probe)};
    if (first == std::set<std::size_t>{0, 1, 2}) {
      Rng rng(seed);
      const auto run = rounds_until_success(triangle_view(), 250, rng);
      ASSERT_TRUE(run.rounds);
      EXPECT_EQ(*run.rounds, 3U);
      EXPECT_EQ(run.adversary_summations, 3U);
      return;
    }
  }
  FAIL() << "no seed wakes the three adversaries first";
}

TEST(RoundsUntilSuccess, SingleAdversaryAlwaysTruncated) {
  const AdversaryView single({0}, {1, 2, 3}, {{true, true, true}});
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    EXPECT_FALSE(rounds_until_success(single, 250, rng).rounds);
  }
}

TEST(RoundsUntilSuccess, IncrementalAgreesWithFullRrefEveryRound) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto view = sample_view({3, 6, 10}, rng);
    ASSERT_TRUE(view);
    const std::uint64_t seed = rng();
    Rng a(seed);
    const auto fast = simulate_attack(*view, a, {60, false, false});

    Rng b(seed);
    AdversarialKnowledge knowledge(*view);
    std::uniform_int_distribution<std::size_t> wake(0, 8);
    std::optional<std::size_t> slow;
    for (std::size_t round = 1; round <= 60; ++round) {
      const auto node = wake(b);
      if (node < 3) {
        if (view->adversary_degree(node) > 0) {
          knowledge.record_summation(node);
        }
      } else {
        knowledge.record_update(node - 3);
      }
      if (!slow && knowledge.summation_count() > 0 &&
          !partial_solutions(knowledge.to_matrix()).empty()) {
        slow = round;
      }
    }
    ASSERT_EQ(fast.success_round, slow);
    const auto final_count =
        knowledge.summation_count() ? solvable_variables(knowledge.to_matrix()).size() : 0;
    ASSERT_EQ(fast.solved_variables_at_end, final_count);
  }
}

TEST(Trajectories, MonotoneAndBoundedByTheStaticCase) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto view = sample_view({3, 5, 9}, rng);
    ASSERT_TRUE(view);
    const auto trajectory = simulate_attack(*view, rng, {120, false, true});
    ASSERT_TRUE(trajectory.knowledge_monotone);
    ASSERT_LE(trajectory.solved_neighbours.size(), reconstructed_count(*view));
  }
}

TEST(Grid, CellsAndFeasibility) {
  GridSpec spec;
  spec.adversaries = {3};
  spec.neighbours = {3, 4};
  spec.samples = 20;
  spec.seed = 42;
  const auto records = run_fraction_grid(spec);
  ASSERT_EQ(records.size(), 2U * (12 - 3 + 1));
  for (const auto& r : records) {
    EXPECT_EQ(r.feasible, admissible(r.params));
    if (r.params.edges == r.params.adversaries * r.params.neighbours) {
      EXPECT_EQ(*r.mean_fraction(), 0.0);
    }
    if (!r.feasible) {
      EXPECT_FALSE(r.mean_fraction());
    }
  }
  // k=3, n=3, m=9 is the complete graph.
  const auto& complete = records[9 - 3];
  EXPECT_EQ(complete.params, (BipartiteParams{3, 3, 9}));
  EXPECT_EQ(*complete.mean_fraction(), 0.0);
}

TEST(Grid, MarginalSumsToOne) {
  GridSpec spec;
  spec.adversaries = {3};
  spec.neighbours = {5};
  spec.samples = 50;
  spec.seed = 9;
  const auto records = run_fraction_grid(spec);
  const auto rows = marginal_distribution(records);
  ASSERT_EQ(rows.size(), 4U);  // counts 0..3
  double total = 0.0;
  for (const auto& row : rows) {
    total += row.probability;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(*marginal_p_at_least_one(records, 3, 5), 1.0 - rows[0].probability, 1e-12);
}

std::string grid_csv(const GridSpec& spec, const RoundsSpec& rounds) {
  std::ostringstream out;
  write_grid_csv(out, run_rounds_grid(spec, rounds));
  return out.str();
}

TEST(Grid, DeterministicAcrossWorkerCounts) {
  GridSpec spec;
  spec.adversaries = {3};
  spec.neighbours = {4, 5};
  spec.samples = 30;
  spec.seed = 77;
  const RoundsSpec rounds{5, 250};
  const auto one = grid_csv(spec, rounds);
  spec.workers = 3;
  EXPECT_EQ(grid_csv(spec, rounds), one);
  spec.seed = 78;
  EXPECT_NE(grid_csv(spec, rounds), one);
}

TEST(Grid, RoundsTruncateAtTheBound) {
  GridSpec spec;
  spec.adversaries = {3};
  spec.neighbours = {3};
  spec.samples = 30;
  spec.seed = 5;
  const auto records = run_rounds_grid(spec, {3, 1});
  std::size_t runs = 0;
  for (const auto& r : records) {
    for (const auto& run : r.runs) {
      EXPECT_FALSE(run.rounds);
      ++runs;
    }
    if (!r.runs.empty()) {
      EXPECT_FALSE(r.mean_summations_per_adversary());
      EXPECT_EQ(*r.truncation_rate(), 1.0);
    }
  }
  EXPECT_GT(runs, 0U);
}

TEST(Csv, HeaderAndNa) {
  ExperimentRecord infeasible;
  infeasible.params = {3, 3, 2};
  infeasible.samples_requested = 10;
  infeasible.seed = 12;
  std::ostringstream out;
  write_grid_csv(out, {infeasible});
  EXPECT_EQ(out.str(),
            "k,n,m,samples,mean_fraction,p_ge_1,mean_rounds,truncation_rate,seed\n"
            "3,3,2,10,NA,NA,NA,NA,12\n");
}

}  // namespace
}  // namespace recon
