#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>

#include "recon/graph.hpp"
#include "recon/random.hpp"

namespace recon {

struct GraphFingerprint {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t hash = 0;  // FNV-1a over the node count and sorted edge list

  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

GraphFingerprint fingerprint(const Graph& g);

/// Collusions of at most max_safe_k adversaries cannot isolate any value:
/// 2 * max_safe_k < girth. nullopt max_safe_k means every k is safe.
struct ResistanceCertificate {
  Girth girth = Girth::acyclic();
  std::optional<std::size_t> max_safe_k;
  GraphFingerprint checked;

  bool covers(std::size_t k) const noexcept { return !max_safe_k || k <= *max_safe_k; }
};

ResistanceCertificate certify(const Graph& g);

std::ostream& operator<<(std::ostream& os, const ResistanceCertificate& certificate);

/// Each adversary has zero or at least two non-adversary neighbours.
bool valid_adversary_set(const Graph& g, const std::set<NodeId>& adversaries);

/// Uniform k-subsets of the nodes, resampled until valid_adversary_set.
std::optional<std::set<NodeId>> sample_adversary_set(const Graph& g, std::size_t k, Rng& rng,
                                                     std::size_t max_attempts);

struct VerificationReport {
  std::size_t k = 0;
  std::size_t trials_requested = 0;
  std::size_t trials_run = 0;
  std::size_t placement_failures = 0;    // no valid set within the attempt bound
  std::size_t trials_with_solutions = 0;
  std::size_t solutions_found = 0;       // solvable variables summed over trials
  std::size_t rounds = 0;
};

std::ostream& operator<<(std::ostream& os, const VerificationReport& report);

/// Runs `rounds` asynchronous rounds for each of `trials` sampled adversary
/// sets and counts the partial solutions the adversaries end up with.
VerificationReport verify_no_partial_solutions(const Graph& g, std::size_t k,
                                               std::size_t trials, std::size_t rounds, Rng& rng,
                                               std::size_t max_placement_attempts = 1'000'000);

// ---------------------------------------------------------------------------
// Distributed cycle breaking by TTL-limited flooding.

/// One copy of a flooded token. Copies remember the edge they left the
/// origin on; the origin accepts a copy back only on a different edge, which
/// is what distinguishes a cycle from a walk that went out and back along a
/// bridge.
struct FloodMessage {
  NodeId origin = 0;
  std::uint64_t token = 0;
  std::size_t ttl = 0;  // hops still allowed
  Edge first_hop;
  NodeId at = 0;        // node currently holding the copy
  NodeId from = 0;      // previous node; the copy arrived on edge (from, at)
};

struct FloodOutcome {
  std::optional<Edge> returned_on;  // edge of the first copy back at the origin
  std::size_t messages = 0;         // forwarded copies
};

/// Floods one token from `origin` with TTL `max_length`. Every node forwards
/// a copy to all neighbours except the one it came from, at most once per
/// (first hop, incoming edge); the origin never forwards its own token.
/// returned_on is set iff the origin lies on a cycle of length <= max_length.
FloodOutcome flood(const Graph& g, NodeId origin, std::size_t max_length, std::uint64_t token);

struct CycleBreakingStats {
  std::size_t passes = 0;
  std::size_t removed_edges = 0;
  std::size_t messages = 0;
};

/// Visits origins in random order, each flooding and removing the edge its
/// token returned on, and repeats full passes until one removes nothing.
/// Afterwards girth > max_length. Throws std::invalid_argument if
/// max_length < 3.
Graph break_short_cycles(const Graph& g, std::size_t max_length, Rng& rng,
                         CycleBreakingStats* stats = nullptr);

}  // namespace recon
