#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "recon/graph.hpp"
#include "recon/random.hpp"

namespace recon {

/// Gossip averaging: every round one uniformly random node replaces its
/// value by the mean of itself and its neighbours. Values are doubles; the
/// update is a convex combination, so the value hull only shrinks.
struct AveragingState {
  Graph graph;
  std::vector<double> values;
  std::size_t round = 0;
};

/// Values drawn independently and uniformly from the integers 0..50.
AveragingState init_state(Graph g, Rng& rng);

/// Deterministic update of one node; isolated nodes keep their value.
void update_node(AveragingState& state, NodeId v);

/// One round: a uniform random node updates. Increments the round counter.
void step(AveragingState& state, Rng& rng);

/// Steps until max - min <= threshold. Returns the number of steps taken, or
/// nullopt if `cap` steps were not enough.
std::optional<std::size_t> run_to_convergence(AveragingState& state, double threshold,
                                              std::size_t cap, Rng& rng);

struct ConvergenceStudySpec {
  std::size_t nodes = 50;
  std::vector<double> probabilities{0.1, 0.5, 0.9};
  std::vector<std::size_t> girths;  // sorted ascending; 3 is the unstretched graph
  std::size_t reps = 1000;
  std::size_t cap = 1'000'000;
  double threshold = 1.0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

struct ConvergenceCell {
  double p = 0.0;
  std::size_t girth = 0;
  std::uint64_t seed = 0;  // master seed; every repetition derives its streams from it
  std::vector<std::optional<std::size_t>> rounds;  // per repetition

  std::size_t cap_exceeded() const;
  /// Over converged repetitions only.
  std::optional<double> mean_rounds() const;
  std::optional<double> stddev_rounds() const;
};

struct ConvergenceStudy {
  std::vector<ConvergenceCell> cells;     // p-major, then girth
  std::vector<std::size_t> resamples;     // disconnected samples redrawn, per p
};

/// For each (p, rep): one connected G(n, p) sample (redrawn while
/// disconnected), stretched incrementally through the girths, with an
/// averaging run from fresh random values at every girth.
ConvergenceStudy run_convergence_study(const ConvergenceStudySpec& spec);

}  // namespace recon
