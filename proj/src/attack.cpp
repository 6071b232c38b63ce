#include "recon/attack.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "recon/linalg.hpp"
#include "recon/parallel.hpp"

namespace recon {

namespace {

// Coordinate tags keep the streams of different experiments apart.
constexpr std::uint64_t kFractionTag = 0x66726163;  // "frac"
constexpr std::uint64_t kRoundsTag = 0x726f756e;    // "roun"

std::uint64_t cell_seed(std::uint64_t master, const BipartiteParams& p) {
  return derive_seed(master, {kFractionTag, p.adversaries, p.neighbours, p.edges});
}

template <typename Get>
std::optional<double> mean_of_completed(const std::vector<RoundsRun>& runs, Get get) {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& run : runs) {
    if (run.rounds) {
      total += get(run);
      ++count;
    }
  }
  if (count == 0) {
    return std::nullopt;
  }
  return total / static_cast<double>(count);
}

}  // namespace

bool admissible(const BipartiteParams& p) {
  const std::size_t k = p.adversaries;
  const std::size_t n = p.neighbours;
  const std::size_t m = p.edges;
  if (k == 0 || n == 0 || m < n) {
    return false;
  }
  for (std::size_t j = 1; j <= k; ++j) {
    if (2 * j <= m && m <= n * j) {
      return true;
    }
  }
  return false;
}

bool passes_filters(const AdversaryView& view) {
  for (std::size_t c = 0; c < view.adversary_count(); ++c) {
    if (view.adversary_degree(c) == 1) {
      return false;
    }
  }
  for (std::size_t nu = 0; nu < view.neighbour_count(); ++nu) {
    if (view.neighbour_degree(nu) == 0) {
      return false;
    }
  }
  return true;
}

std::optional<AdversaryView> sample_view(const BipartiteParams& params, Rng& rng,
                                         std::size_t max_rejections) {
  if (!admissible(params)) {
    return std::nullopt;
  }
  const std::size_t k = params.adversaries;
  const std::size_t n = params.neighbours;
  const std::size_t m = params.edges;
  std::vector<std::size_t> cells(k * n);
  std::vector<std::size_t> adversary_degree(k);
  std::vector<std::size_t> neighbour_degree(n);

  for (std::size_t attempt = 0; attempt <= max_rejections; ++attempt) {
    std::iota(cells.begin(), cells.end(), 0);
    // Partial Fisher-Yates: cells[0..m) is a uniform m-subset.
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, cells.size() - 1);
      std::swap(cells[i], cells[pick(rng)]);
    }
    std::fill(adversary_degree.begin(), adversary_degree.end(), 0);
    std::fill(neighbour_degree.begin(), neighbour_degree.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      ++adversary_degree[cells[i] / n];
      ++neighbour_degree[cells[i] % n];
    }
    const bool ok =
        std::none_of(adversary_degree.begin(), adversary_degree.end(),
                     [](std::size_t d) { return d == 1; }) &&
        std::none_of(neighbour_degree.begin(), neighbour_degree.end(),
                     [](std::size_t d) { return d == 0; });
    if (!ok) {
      continue;
    }
    std::vector<std::vector<bool>> biadjacency(k, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < m; ++i) {
      biadjacency[cells[i] / n][cells[i] % n] = true;
    }
    std::vector<NodeId> adversary_labels(k);
    std::vector<NodeId> neighbour_labels(n);
    std::iota(adversary_labels.begin(), adversary_labels.end(), 0);
    std::iota(neighbour_labels.begin(), neighbour_labels.end(), k);
    return AdversaryView(std::move(adversary_labels), std::move(neighbour_labels), biadjacency);
  }
  return std::nullopt;
}

std::size_t reconstructed_count(const AdversaryView& view) {
  IncrementalRref elimination;
  for (std::size_t c = 0; c < view.adversary_count(); ++c) {
    SparseRow row;
    for (const auto nu : view.neighbours_of(c)) {
      row.emplace_back(nu, 1);
    }
    if (!row.empty()) {
      elimination.add_row(std::move(row));
    }
  }
  return elimination.solved_variables().size();
}

AttackTrajectory simulate_attack(const AdversaryView& view, Rng& rng,
                                 const TrajectoryOptions& options) {
  AttackTrajectory out;
  const std::size_t k = view.adversary_count();
  const std::size_t nodes = k + view.neighbour_count();
  if (nodes == 0) {
    return out;
  }
  AdversarialKnowledge knowledge(view);
  IncrementalRref elimination;
  std::set<std::size_t> solved_keys;
  std::uniform_int_distribution<std::size_t> wake(0, nodes - 1);

  for (std::size_t round = 1; round <= options.max_rounds; ++round) {
    out.rounds_run = round;
    const std::size_t node = wake(rng);
    if (node < k) {
      if (view.adversary_degree(node) > 0) {
        const auto& observation = knowledge.record_summation(node);
        elimination.add_row(knowledge.sparse_row(observation));
        ++out.adversary_summations;
      }
    } else {
      knowledge.record_update(node - k);
    }

    if (options.track_solved) {
      auto keys = elimination.solved_variables();
      if (!std::includes(keys.begin(), keys.end(), solved_keys.begin(), solved_keys.end())) {
        out.knowledge_monotone = false;
      }
      for (const auto key : keys) {
        out.solved_neighbours.insert(knowledge.variable_of_sparse_key(key).neighbour);
      }
      solved_keys = std::move(keys);
    }

    if (!out.success_round && elimination.has_partial_solution()) {
      out.success_round = round;
      if (options.stop_at_success) {
        break;
      }
    }
  }
  out.solved_variables_at_end = elimination.solved_variables().size();
  return out;
}

SuccessRun rounds_until_success(const AdversaryView& view, std::size_t max_rounds, Rng& rng) {
  const auto trajectory = simulate_attack(view, rng, {max_rounds, true, false});
  return {trajectory.success_round, trajectory.adversary_summations};
}

// ---------------------------------------------------------------------------

std::optional<double> ExperimentRecord::mean_fraction() const {
  if (!feasible || reconstructed.empty()) {
    return std::nullopt;
  }
  double total = 0.0;
  for (const auto count : reconstructed) {
    total += static_cast<double>(count) / static_cast<double>(params.neighbours);
  }
  return total / static_cast<double>(reconstructed.size());
}

std::optional<double> ExperimentRecord::p_at_least_one() const {
  if (!feasible || reconstructed.empty()) {
    return std::nullopt;
  }
  return static_cast<double>(solvable_views()) / static_cast<double>(reconstructed.size());
}

std::size_t ExperimentRecord::solvable_views() const {
  return static_cast<std::size_t>(
      std::count_if(reconstructed.begin(), reconstructed.end(), [](auto c) { return c > 0; }));
}

std::optional<double> ExperimentRecord::mean_total_rounds() const {
  return mean_of_completed(runs, [](const RoundsRun& r) { return static_cast<double>(*r.rounds); });
}

std::optional<double> ExperimentRecord::mean_adversary_summations() const {
  return mean_of_completed(
      runs, [](const RoundsRun& r) { return static_cast<double>(r.adversary_summations); });
}

std::optional<double> ExperimentRecord::mean_summations_per_adversary() const {
  const double k = static_cast<double>(params.adversaries);
  return mean_of_completed(
      runs, [k](const RoundsRun& r) { return static_cast<double>(r.adversary_summations) / k; });
}

std::optional<double> ExperimentRecord::truncation_rate() const {
  if (!has_rounds || runs.empty()) {
    return std::nullopt;
  }
  const auto truncated =
      std::count_if(runs.begin(), runs.end(), [](const RoundsRun& r) { return !r.rounds; });
  return static_cast<double>(truncated) / static_cast<double>(runs.size());
}

std::vector<BipartiteParams> grid_cells(const GridSpec& spec) {
  if (spec.adversaries.empty() || spec.neighbours.empty()) {
    throw std::invalid_argument("grid needs at least one adversary count and neighbour count");
  }
  std::vector<BipartiteParams> cells;
  for (const auto k : spec.adversaries) {
    std::vector<std::size_t> edges = spec.edges;
    if (edges.empty()) {
      const auto [lo, hi] = std::minmax_element(spec.neighbours.begin(), spec.neighbours.end());
      for (std::size_t m = *lo; m <= k * *hi; ++m) {
        edges.push_back(m);
      }
    }
    for (const auto n : spec.neighbours) {
      for (const auto m : edges) {
        cells.push_back({k, n, m});
      }
    }
  }
  return cells;
}

namespace {

ExperimentRecord sample_cell(const BipartiteParams& params, const GridSpec& spec,
                             std::vector<AdversaryView>* keep_views) {
  ExperimentRecord record;
  record.params = params;
  record.seed = cell_seed(spec.seed, params);
  record.samples_requested = spec.samples;
  if (!admissible(params)) {
    return record;
  }
  Rng rng(record.seed);
  record.reconstructed.reserve(spec.samples);
  for (std::size_t s = 0; s < spec.samples; ++s) {
    auto view = sample_view(params, rng, spec.max_rejections);
    if (!view) {
      record.reconstructed.clear();
      if (keep_views) {
        keep_views->clear();
      }
      return record;
    }
    record.reconstructed.push_back(reconstructed_count(*view));
    if (keep_views) {
      keep_views->push_back(std::move(*view));
    }
  }
  record.feasible = true;
  return record;
}

}  // namespace

std::vector<ExperimentRecord> run_fraction_grid(const GridSpec& spec) {
  const auto cells = grid_cells(spec);
  std::vector<ExperimentRecord> records(cells.size());
  parallel_for(cells.size(), spec.workers,
               [&](std::size_t i) { records[i] = sample_cell(cells[i], spec, nullptr); });
  return records;
}

std::vector<MarginalRow> marginal_distribution(const std::vector<ExperimentRecord>& records) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> histograms;
  for (const auto& record : records) {
    const std::size_t k = record.params.adversaries;
    const std::size_t n = record.params.neighbours;
    auto& histogram = histograms[{k, n}];
    histogram.resize(std::min(k, n) + 1, 0);
    if (!record.feasible) {
      continue;
    }
    for (const auto count : record.reconstructed) {
      ++histogram.at(count);
    }
  }
  std::vector<MarginalRow> rows;
  for (const auto& [key, histogram] : histograms) {
    const auto total = std::accumulate(histogram.begin(), histogram.end(), std::size_t{0});
    if (total == 0) {
      continue;
    }
    for (std::size_t count = 0; count < histogram.size(); ++count) {
      rows.push_back({key.first, key.second, count,
                      static_cast<double>(histogram[count]) / static_cast<double>(total)});
    }
  }
  return rows;
}

std::optional<double> marginal_p_at_least_one(const std::vector<ExperimentRecord>& records,
                                              std::size_t k, std::size_t n) {
  std::optional<double> p_zero;
  for (const auto& row : marginal_distribution(records)) {
    if (row.adversaries == k && row.neighbours == n && row.count == 0) {
      p_zero = row.probability;
    }
  }
  if (!p_zero) {
    return std::nullopt;
  }
  return 1.0 - *p_zero;
}

std::vector<ExperimentRecord> run_rounds_grid(const GridSpec& spec, const RoundsSpec& rounds) {
  const auto cells = grid_cells(spec);
  std::vector<ExperimentRecord> records(cells.size());
  parallel_for(cells.size(), spec.workers, [&](std::size_t i) {
    std::vector<AdversaryView> views;
    auto record = sample_cell(cells[i], spec, &views);
    record.has_rounds = true;
    if (record.feasible) {
      Rng rng(derive_seed(record.seed, {kRoundsTag}));
      for (std::size_t v = 0; v < views.size(); ++v) {
        if (record.reconstructed[v] == 0) {
          continue;
        }
        for (std::size_t rep = 0; rep < rounds.reps; ++rep) {
          const auto run = rounds_until_success(views[v], rounds.max_rounds, rng);
          record.runs.push_back({v, run.rounds, run.adversary_summations});
        }
      }
    }
    records[i] = std::move(record);
  });
  return records;
}

PooledRounds pool_rounds(const std::vector<ExperimentRecord>& records, std::size_t k,
                         std::size_t n) {
  PooledRounds out;
  double total_rounds = 0.0;
  double summations = 0.0;
  std::size_t completed = 0;
  for (const auto& record : records) {
    if (record.params.adversaries != k || record.params.neighbours != n) {
      continue;
    }
    for (const auto& run : record.runs) {
      ++out.runs;
      if (!run.rounds) {
        ++out.truncated;
        continue;
      }
      ++completed;
      total_rounds += static_cast<double>(*run.rounds);
      summations += static_cast<double>(run.adversary_summations);
    }
  }
  if (completed > 0) {
    const double c = static_cast<double>(completed);
    out.mean_total_rounds = total_rounds / c;
    out.mean_adversary_summations = summations / c;
    out.mean_summations_per_adversary = summations / c / static_cast<double>(k);
  }
  return out;
}

}  // namespace recon
