#include "recon/defence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <tuple>
#include <stdexcept>
#include <vector>

#include "recon/attack.hpp"

namespace recon {

GraphFingerprint fingerprint(const Graph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  const auto mix = [&hash](std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (value >> (8 * byte)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(g.node_count());
  for (const auto& e : g.edges()) {
    mix(e.u);
    mix(e.v);
  }
  return {g.node_count(), g.edge_count(), hash};
}

ResistanceCertificate certify(const Graph& g) {
  ResistanceCertificate certificate;
  certificate.girth = girth(g);
  certificate.checked = fingerprint(g);
  if (certificate.girth.is_finite()) {
    certificate.max_safe_k = (certificate.girth.value() + 1) / 2 - 1;
  }
  return certificate;
}

std::ostream& operator<<(std::ostream& os, const ResistanceCertificate& c) {
  os << "nodes " << c.checked.nodes << ", edges " << c.checked.edges << ", hash " << std::hex
     << c.checked.hash << std::dec << "\n";
  os << "girth " << c.girth << "\n";
  os << "max_safe_k ";
  if (c.max_safe_k) {
    os << *c.max_safe_k;
  } else {
    os << "unbounded";
  }
  return os << "\n";
}

bool valid_adversary_set(const Graph& g, const std::set<NodeId>& adversaries) {
  for (const auto c : adversaries) {
    std::size_t outside = 0;
    for (const auto u : g.adjacent(c)) {
      if (!adversaries.contains(u)) {
        ++outside;
      }
    }
    if (outside == 1) {
      return false;
    }
  }
  return true;
}

std::optional<std::set<NodeId>> sample_adversary_set(const Graph& g, std::size_t k, Rng& rng,
                                                     std::size_t max_attempts) {
  const std::size_t n = g.node_count();
  if (k > n) {
    return std::nullopt;
  }
  std::vector<NodeId> nodes(n);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::iota(nodes.begin(), nodes.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(nodes[i], nodes[pick(rng)]);
    }
    std::set<NodeId> chosen(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(k));
    if (valid_adversary_set(g, chosen)) {
      return chosen;
    }
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const VerificationReport& r) {
  return os << "k " << r.k << ", trials " << r.trials_run << "/" << r.trials_requested
            << " (placement failures " << r.placement_failures << "), rounds " << r.rounds
            << ", trials with solutions " << r.trials_with_solutions << ", solutions found "
            << r.solutions_found << "\n";
}

VerificationReport verify_no_partial_solutions(const Graph& g, std::size_t k,
                                               std::size_t trials, std::size_t rounds, Rng& rng,
                                               std::size_t max_placement_attempts) {
  VerificationReport report;
  report.k = k;
  report.trials_requested = trials;
  report.rounds = rounds;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto adversaries = sample_adversary_set(g, k, rng, max_placement_attempts);
    if (!adversaries) {
      ++report.placement_failures;
      continue;
    }
    ++report.trials_run;
    const auto view = adversary_view(g, *adversaries);
    const auto trajectory = simulate_attack(view, rng, {rounds, false, false});
    if (trajectory.solved_variables_at_end > 0) {
      ++report.trials_with_solutions;
      report.solutions_found += trajectory.solved_variables_at_end;
    }
  }
  return report;
}

FloodOutcome flood(const Graph& g, NodeId origin, std::size_t max_length, std::uint64_t token) {
  FloodOutcome outcome;
  if (max_length == 0) {
    return outcome;
  }
  // Seen (first-hop neighbour, holder, sender) triples; the holder forwards
  // at most once per first hop and incoming edge.
  std::set<std::tuple<NodeId, NodeId, NodeId>> forwarded;
  std::deque<FloodMessage> queue;  // FIFO: copies are handled in hop order
  for (const auto x : g.adjacent(origin)) {
    queue.push_back({origin, token, max_length - 1, Edge::canonical(origin, x), x, origin});
    ++outcome.messages;
  }
  while (!queue.empty()) {
    const FloodMessage message = queue.front();
    queue.pop_front();
    if (message.at == origin) {
      const Edge arrived = Edge::canonical(message.from, message.at);
      if (arrived != message.first_hop) {
        outcome.returned_on = arrived;
        return outcome;
      }
      continue;
    }
    if (message.ttl == 0) {
      continue;
    }
    const NodeId first = message.first_hop.u == origin ? message.first_hop.v : message.first_hop.u;
    if (!forwarded.emplace(first, message.at, message.from).second) {
      continue;
    }
    for (const auto next : g.adjacent(message.at)) {
      if (next == message.from) {
        continue;
      }
      queue.push_back(
          {origin, token, message.ttl - 1, message.first_hop, next, message.at});
      ++outcome.messages;
    }
  }
  return outcome;
}

Graph break_short_cycles(const Graph& g, std::size_t max_length, Rng& rng,
                         CycleBreakingStats* stats) {
  if (max_length < 3) {
    throw std::invalid_argument("cycle breaking needs a maximum length of at least 3");
  }
  Graph out = g;
  CycleBreakingStats local;
  std::vector<NodeId> order(out.node_count());
  bool removed_any = true;
  while (removed_any) {
    removed_any = false;
    ++local.passes;
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (const auto origin : order) {
      const auto outcome = flood(out, origin, max_length, rng());
      local.messages += outcome.messages;
      if (outcome.returned_on) {
        out.remove_edge(outcome.returned_on->u, outcome.returned_on->v);
        ++local.removed_edges;
        removed_any = true;
      }
    }
  }
  if (stats) {
    *stats = local;
  }
  return out;
}

}  // namespace recon
