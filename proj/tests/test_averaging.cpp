#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "recon/averaging.hpp"
#include "recon/csv.hpp"
#include "support.hpp"

namespace recon {
namespace {

using testing::cycle_graph;

Graph single_edge() {
  Graph g(2);
  g.add_edge(0, 1);
  return g;
}

TEST(InitState, RangeAndDeterminism) {
  Rng a(1);
  Rng b(1);
  const auto s = init_state(cycle_graph(50), a);
  EXPECT_EQ(s.values, init_state(cycle_graph(50), b).values);
  for (const double v : s.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 50.0);
    EXPECT_EQ(v, std::floor(v));
  }
}

TEST(InitState, SampleMean) {
  double total = 0.0;
  const int seeds = 1000;
  for (int seed = 0; seed < seeds; ++seed) {
    Rng rng(seed);
    const auto s = init_state(cycle_graph(50), rng);
    for (const double v : s.values) {
      total += v;
    }
  }
  const double count = 50.0 * seeds;
  const double sigma = std::sqrt((51.0 * 51.0 - 1.0) / 12.0 / count);
  EXPECT_NEAR(total / count, 25.0, 5 * sigma);
}

TEST(Step, Examples) {
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  AveragingState s{star, {25, 0, 50, 25}, 0};
  update_node(s, 0);
  EXPECT_EQ(s.values[0], 25.0);

  AveragingState pair{single_edge(), {0, 50}, 0};
  update_node(pair, 1);
  EXPECT_EQ(pair.values[1], 25.0);

  AveragingState isolated{Graph(2), {3, 9}, 0};
  Rng rng(2);
  step(isolated, rng);
  EXPECT_EQ(isolated.values, (std::vector<double>{3, 9}));
  EXPECT_EQ(isolated.round, 1U);
}

TEST(Step, AllEqualIsAFixedPoint) {
  Rng rng(3);
  AveragingState s{erdos_renyi(20, 0.3, rng), std::vector<double>(20, 17.0), 0};
  for (int i = 0; i < 500; ++i) {
    step(s, rng);
  }
  EXPECT_EQ(s.values, std::vector<double>(20, 17.0));
}

// Averages may round one ulp outside the previous hull.
TEST(Step, ValueHullOnlyShrinks) {
  Rng rng(4);
  auto s = init_state(erdos_renyi(30, 0.2, rng), rng);
  double hi = *std::max_element(s.values.begin(), s.values.end());
  double lo = *std::min_element(s.values.begin(), s.values.end());
  for (int i = 0; i < 5000; ++i) {
    step(s, rng);
    const double new_hi = *std::max_element(s.values.begin(), s.values.end());
    const double new_lo = *std::min_element(s.values.begin(), s.values.end());
    ASSERT_LE(new_hi, hi + 1e-9);
    ASSERT_GE(new_lo, lo - 1e-9);
    hi = new_hi;
    lo = new_lo;
  }
}

TEST(Convergence, AlreadyConverged) {
  Rng rng(5);
  AveragingState s{cycle_graph(5), {1, 1.5, 1, 2, 1}, 0};
  EXPECT_EQ(run_to_convergence(s, 1.0, 10, rng), 0U);
}

TEST(Convergence, TwoNodesHalveTheGapEveryRound) {
  // Whichever node updates, the gap halves: 50, 25, 12.5, ..., 0.78125.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    AveragingState s{single_edge(), {0, 50}, 0};
    EXPECT_EQ(run_to_convergence(s, 1.0, 1000, rng), 6U);
    EXPECT_EQ(s.round, 6U);
  }
}

TEST(Convergence, DisconnectedUnequalComponentsHitTheCap) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  Rng rng(6);
  AveragingState s{g, {0, 0, 50, 50}, 0};
  EXPECT_FALSE(run_to_convergence(s, 1.0, 10000, rng));
  EXPECT_THROW(run_to_convergence(s, 1.0, 0, rng), std::invalid_argument);
}

TEST(Convergence, IncrementalExtremesMatchAFullScan) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = erdos_renyi(15, 0.3, rng);
    auto s = init_state(g, rng);
    auto copy = s;
    const std::uint64_t seed = rng();
    Rng fast_rng(seed);
    const auto fast = run_to_convergence(s, 1.0, 100000, fast_rng);
    Rng slow_rng(seed);
    std::optional<std::size_t> slow;
    std::uniform_int_distribution<std::size_t> pick(0, 14);
    for (std::size_t steps = 0; steps <= 100000; ++steps) {
      const auto [lo, hi] = std::minmax_element(copy.values.begin(), copy.values.end());
      if (*hi - *lo <= 1.0) {
        slow = steps;
        break;
      }
      if (steps == 100000) {
        break;
      }
      update_node(copy, pick(slow_rng));
    }
    ASSERT_EQ(fast, slow);
  }
}

TEST(Study, DeterministicAndComplete) {
  ConvergenceStudySpec spec;
  spec.nodes = 20;
  spec.probabilities = {0.3, 0.6};
  spec.girths = {5, 3, 4};
  spec.reps = 6;
  spec.seed = 11;
  const auto a = run_convergence_study(spec);
  ASSERT_EQ(a.cells.size(), 6U);
  EXPECT_EQ(a.cells[0].girth, 3U);
  EXPECT_EQ(a.cells[2].girth, 5U);
  spec.workers = 4;
  const auto b = run_convergence_study(spec);
  std::ostringstream csv_a;
  std::ostringstream csv_b;
  write_convergence_csv(csv_a, a);
  write_convergence_csv(csv_b, b);
  EXPECT_EQ(csv_a.str(), csv_b.str());
  EXPECT_EQ(csv_a.str().substr(0, csv_a.str().find('\n')),
            "p,girth,reps,mean_rounds,stddev_rounds,cap_exceeded,seed");
  for (const auto& cell : a.cells) {
    EXPECT_EQ(cell.cap_exceeded(), 0U);
    EXPECT_TRUE(cell.mean_rounds());
  }
}

TEST(Study, RejectsBadGirths) {
  ConvergenceStudySpec spec;
  spec.girths = {2, 5};
  EXPECT_THROW(run_convergence_study(spec), std::invalid_argument);
}

}  // namespace
}  // namespace recon
