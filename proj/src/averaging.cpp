#include "recon/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "recon/parallel.hpp"

namespace recon {

namespace {

constexpr std::uint64_t kGraphTag = 0x67726170;   // "grap"
constexpr std::uint64_t kValuesTag = 0x76616c75;  // "valu"

}  // namespace

AveragingState init_state(Graph g, Rng& rng) {
  AveragingState state{std::move(g), {}, 0};
  std::uniform_int_distribution<int> value(0, 50);
  state.values.resize(state.graph.node_count());
  for (auto& v : state.values) {
    v = value(rng);
  }
  return state;
}

void update_node(AveragingState& state, NodeId v) {
  const auto& adjacent = state.graph.adjacent(v);
  if (adjacent.empty()) {
    return;
  }
  double total = state.values[v];
  for (const auto u : adjacent) {
    total += state.values[u];
  }
  state.values[v] = total / static_cast<double>(adjacent.size() + 1);
}

void step(AveragingState& state, Rng& rng) {
  ++state.round;
  if (state.values.empty()) {
    return;
  }
  std::uniform_int_distribution<std::size_t> pick(0, state.values.size() - 1);
  update_node(state, pick(rng));
}

std::optional<std::size_t> run_to_convergence(AveragingState& state, double threshold,
                                              std::size_t cap, Rng& rng) {
  if (cap == 0) {
    throw std::invalid_argument("convergence cap must be at least 1");
  }
  auto& values = state.values;
  if (values.empty()) {
    return 0;
  }
  double hi = *std::max_element(values.begin(), values.end());
  double lo = *std::min_element(values.begin(), values.end());
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  for (std::size_t steps = 0;; ++steps) {
    if (hi - lo <= threshold) {
      return steps;
    }
    if (steps == cap) {
      return std::nullopt;
    }
    const NodeId v = pick(rng);
    const double before = values[v];
    update_node(state, v);
    ++state.round;
    const double after = values[v];
    // The new value lies inside [lo, hi]; only a former extreme can move them.
    if (before == hi && after < hi) {
      hi = *std::max_element(values.begin(), values.end());
    }
    if (before == lo && after > lo) {
      lo = *std::min_element(values.begin(), values.end());
    }
  }
}

std::size_t ConvergenceCell::cap_exceeded() const {
  return static_cast<std::size_t>(
      std::count_if(rounds.begin(), rounds.end(), [](const auto& r) { return !r; }));
}

std::optional<double> ConvergenceCell::mean_rounds() const {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& r : rounds) {
    if (r) {
      total += static_cast<double>(*r);
      ++count;
    }
  }
  if (count == 0) {
    return std::nullopt;
  }
  return total / static_cast<double>(count);
}

std::optional<double> ConvergenceCell::stddev_rounds() const {
  const auto mean = mean_rounds();
  if (!mean) {
    return std::nullopt;
  }
  double squares = 0.0;
  std::size_t count = 0;
  for (const auto& r : rounds) {
    if (r) {
      const double d = static_cast<double>(*r) - *mean;
      squares += d * d;
      ++count;
    }
  }
  if (count < 2) {
    return 0.0;
  }
  return std::sqrt(squares / static_cast<double>(count - 1));
}

ConvergenceStudy run_convergence_study(const ConvergenceStudySpec& spec) {
  std::vector<std::size_t> girths = spec.girths;
  std::sort(girths.begin(), girths.end());
  girths.erase(std::unique(girths.begin(), girths.end()), girths.end());
  if (girths.empty() || girths.front() < 3) {
    throw std::invalid_argument("girths must be non-empty and at least 3");
  }
  if (spec.probabilities.empty()) {
    throw std::invalid_argument("need at least one edge probability");
  }
  const std::size_t ps = spec.probabilities.size();
  const std::size_t gs = girths.size();

  ConvergenceStudy study;
  study.cells.resize(ps * gs);
  for (std::size_t pi = 0; pi < ps; ++pi) {
    for (std::size_t gi = 0; gi < gs; ++gi) {
      auto& cell = study.cells[pi * gs + gi];
      cell.p = spec.probabilities[pi];
      cell.girth = girths[gi];
      cell.seed = spec.seed;
      cell.rounds.resize(spec.reps);
    }
  }
  std::vector<std::size_t> resamples(ps * spec.reps, 0);

  parallel_for(ps * spec.reps, spec.workers, [&](std::size_t job) {
    const std::size_t pi = job / spec.reps;
    const std::size_t rep = job % spec.reps;
    Rng graph_rng(derive_seed(spec.seed, {kGraphTag, pi, rep}));
    Graph g = erdos_renyi(spec.nodes, spec.probabilities[pi], graph_rng);
    while (!is_connected(g)) {
      ++resamples[job];
      g = erdos_renyi(spec.nodes, spec.probabilities[pi], graph_rng);
    }
    for (std::size_t gi = 0; gi < gs; ++gi) {
      stretch_in_place(g, girths[gi], graph_rng);
      Rng value_rng(derive_seed(spec.seed, {kValuesTag, pi, rep, girths[gi]}));
      auto state = init_state(g, value_rng);
      study.cells[pi * gs + gi].rounds[rep] =
          run_to_convergence(state, spec.threshold, spec.cap, value_rng);
    }
  });

  study.resamples.assign(ps, 0);
  for (std::size_t job = 0; job < resamples.size(); ++job) {
    study.resamples[job / spec.reps] += resamples[job];
  }
  return study;
}

}  // namespace recon
