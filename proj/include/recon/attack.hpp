#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "recon/graph.hpp"
#include "recon/knowledge.hpp"
#include "recon/random.hpp"

namespace recon {

/// Shape of a random adversary view: k adversaries, n neighbours, m edges.
struct BipartiteParams {
  std::size_t adversaries = 0;
  std::size_t neighbours = 0;
  std::size_t edges = 0;

  auto operator<=>(const BipartiteParams&) const = default;
};

/// Whether some bipartite graph with these counts passes the view filters:
/// every neighbour has an edge and every adversary has zero or >= 2 edges.
/// Holds iff m >= n and 2j <= m <= n * j for some 1 <= j <= k.
bool admissible(const BipartiteParams& params);

/// The filters sample_view enforces.
bool passes_filters(const AdversaryView& view);

inline constexpr std::size_t kDefaultMaxRejections = 1'000'000;

/// Uniform over filtered graphs: a uniform m-subset of the k x n cells,
/// resampled until it passes the filters. nullopt when the parameters are
/// inadmissible or `max_rejections` draws all fail.
std::optional<AdversaryView> sample_view(const BipartiteParams& params, Rng& rng,
                                         std::size_t max_rejections = kDefaultMaxRejections);

/// Neighbours whose value a single summation per adversary reveals: the
/// solvable columns of the k x n biadjacency matrix.
std::size_t reconstructed_count(const AdversaryView& view);

/// One asynchronous attack. Every round a uniformly random node of the view
/// wakes: an adversary with neighbours records a summation, a neighbour
/// records an update. The adversaries test for a partial solution after
/// every round.
struct AttackTrajectory {
  std::optional<std::size_t> success_round;  // 1-based
  std::size_t rounds_run = 0;
  std::size_t adversary_summations = 0;      // up to and including success
  std::set<std::size_t> solved_neighbours;   // distinct neighbours ever solved
  bool knowledge_monotone = true;            // solvable set never shrank
  std::size_t solved_variables_at_end = 0;
};

struct TrajectoryOptions {
  std::size_t max_rounds = 250;
  bool stop_at_success = true;
  /// Tracks solved_neighbours and knowledge_monotone after every round.
  bool track_solved = false;
};

AttackTrajectory simulate_attack(const AdversaryView& view, Rng& rng,
                                 const TrajectoryOptions& options = {});

struct SuccessRun {
  std::optional<std::size_t> rounds;  // nullopt: truncated
  std::size_t adversary_summations = 0;
};

SuccessRun rounds_until_success(const AdversaryView& view, std::size_t max_rounds, Rng& rng);

// ---------------------------------------------------------------------------
// Grids

struct RoundsRun {
  std::size_t view_index = 0;  // into ExperimentRecord::reconstructed
  std::optional<std::size_t> rounds;
  std::size_t adversary_summations = 0;
};

/// One (k, n, m) cell. Aggregates are recomputed from the per-sample data.
struct ExperimentRecord {
  BipartiteParams params;
  std::uint64_t seed = 0;
  std::size_t samples_requested = 0;
  bool feasible = false;              // admissible and every sample found
  std::vector<std::size_t> reconstructed;  // per sampled view
  bool has_rounds = false;
  std::vector<RoundsRun> runs;        // rounds grid only

  std::optional<double> mean_fraction() const;
  std::optional<double> p_at_least_one() const;
  std::size_t solvable_views() const;
  /// Over non-truncated runs; nullopt when there are none.
  std::optional<double> mean_total_rounds() const;
  std::optional<double> mean_adversary_summations() const;
  std::optional<double> mean_summations_per_adversary() const;
  std::optional<double> truncation_rate() const;
};

struct MarginalRow {
  std::size_t adversaries = 0;
  std::size_t neighbours = 0;
  std::size_t count = 0;
  double probability = 0.0;
};

struct GridSpec {
  std::vector<std::size_t> adversaries;
  std::vector<std::size_t> neighbours;
  /// Edge counts; empty means min(neighbours)..k * max(neighbours) per k.
  std::vector<std::size_t> edges;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t max_rejections = kDefaultMaxRejections;
};

struct RoundsSpec {
  std::size_t reps = 100;
  std::size_t max_rounds = 250;
};

/// Cells in (k, n, m) order.
std::vector<BipartiteParams> grid_cells(const GridSpec& spec);

std::vector<ExperimentRecord> run_fraction_grid(const GridSpec& spec);

/// Per (k, n): distribution of reconstructed_count over the pooled samples
/// of every feasible cell, each cell contributing its equal sample count.
/// Counts run 0..min(k, n).
std::vector<MarginalRow> marginal_distribution(const std::vector<ExperimentRecord>& records);

/// P(count >= 1) of the pooled (k, n) marginal.
std::optional<double> marginal_p_at_least_one(const std::vector<ExperimentRecord>& records,
                                              std::size_t k, std::size_t n);

/// Samples exactly as run_fraction_grid does (same views per cell), then
/// attacks every statically solvable view `reps` times.
std::vector<ExperimentRecord> run_rounds_grid(const GridSpec& spec, const RoundsSpec& rounds);

/// Pooled rounds readings over a set of records (non-truncated runs only).
struct PooledRounds {
  std::size_t runs = 0;
  std::size_t truncated = 0;
  std::optional<double> mean_total_rounds;
  std::optional<double> mean_adversary_summations;
  std::optional<double> mean_summations_per_adversary;
};
PooledRounds pool_rounds(const std::vector<ExperimentRecord>& records, std::size_t k,
                         std::size_t n);

}  // namespace recon
