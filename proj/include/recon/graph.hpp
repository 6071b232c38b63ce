#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "recon/matrix.hpp"
#include "recon/random.hpp"

namespace recon {

using NodeId = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge canonical(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Undirected, self-loopless, simple graph over nodes 0..node_count-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);
  Graph(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Returns false if the edge already existed. Throws std::invalid_argument
  /// on a self-loop and std::out_of_range on an unknown endpoint.
  bool add_edge(NodeId a, NodeId b);
  bool remove_edge(NodeId a, NodeId b);
  bool has_edge(NodeId a, NodeId b) const;

  /// Sorted adjacency list.
  const std::vector<NodeId>& adjacent(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }

  /// Canonical edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// N_G(v). Throws std::out_of_range for an unknown node.
std::set<NodeId> neighbours(const Graph& g, NodeId v);

std::vector<std::size_t> component_labels(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

// ---------------------------------------------------------------------------
// Adversary view

/// Bipartite graph between a set of adversaries and their non-adversary
/// neighbours. Edges among adversaries and among neighbours are dropped.
class AdversaryView {
 public:
  AdversaryView() = default;
  /// `biadjacency[c][nu]` tells whether adversary c is adjacent to neighbour nu.
  AdversaryView(std::vector<NodeId> adversary_labels, std::vector<NodeId> neighbour_labels,
                const std::vector<std::vector<bool>>& biadjacency);

  std::size_t adversary_count() const noexcept { return adversary_labels_.size(); }
  std::size_t neighbour_count() const noexcept { return neighbour_labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(std::size_t adversary, std::size_t neighbour) const;
  /// Neighbour indices (into neighbour_labels) of one adversary, sorted.
  const std::vector<std::size_t>& neighbours_of(std::size_t adversary) const {
    return adversary_neighbours_.at(adversary);
  }
  std::size_t adversary_degree(std::size_t adversary) const {
    return neighbours_of(adversary).size();
  }
  std::size_t neighbour_degree(std::size_t neighbour) const;

  const std::vector<NodeId>& adversary_labels() const noexcept { return adversary_labels_; }
  const std::vector<NodeId>& neighbour_labels() const noexcept { return neighbour_labels_; }

  /// k x n 0/1 matrix.
  RationalMatrix biadjacency_matrix() const;

  friend bool operator==(const AdversaryView&, const AdversaryView&) = default;

 private:
  std::vector<NodeId> adversary_labels_;
  std::vector<NodeId> neighbour_labels_;
  std::vector<std::vector<std::size_t>> adversary_neighbours_;
  std::size_t edge_count_ = 0;
};

/// View of adversaries C over N_G(C) = (union of N_G(c)) \ C. Adversaries and
/// neighbours are both ordered by node index.
AdversaryView adversary_view(const Graph& g, const std::set<NodeId>& adversaries);

// ---------------------------------------------------------------------------
// Girth and cycles

/// Length of a shortest cycle, or the acyclic marker.
class Girth {
 public:
  static Girth acyclic() { return Girth{}; }
  static Girth finite(std::size_t length) { return Girth{length}; }

  bool is_acyclic() const noexcept { return !length_.has_value(); }
  bool is_finite() const noexcept { return length_.has_value(); }
  /// Throws std::bad_optional_access on an acyclic girth.
  std::size_t value() const { return length_.value(); }

  /// girth > bound, with acyclic exceeding every bound.
  bool exceeds(std::size_t bound) const noexcept { return !length_ || *length_ > bound; }

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  explicit Girth(std::size_t length) : length_(length) {}
  std::optional<std::size_t> length_;
};

std::ostream& operator<<(std::ostream& os, const Girth& g);

/// Exact girth from a BFS rooted at every node.
Girth girth(const Graph& g);

/// Edges of one shortest cycle in traversal order, or nullopt for an acyclic
/// graph. Deterministic: the first root (in node order) achieving the girth.
std::optional<std::vector<Edge>> shortest_cycle(const Graph& g);

/// Shortest cycle of length < `below`, searched only over lengths >=
/// `known_lower_bound` (the search stops at the first cycle that short).
/// Returns nullopt when every cycle has length >= `below`.
std::optional<std::vector<Edge>> shortest_cycle_below(const Graph& g, std::size_t below,
                                                      std::size_t known_lower_bound = 3);

/// Removes a uniformly random edge of a current shortest cycle until no
/// cycle shorter than `target_girth` remains.
Graph stretch_to_girth(const Graph& g, std::size_t target_girth, Rng& rng);

/// In-place variant; returns the number of removed edges. Continuing from a
/// graph already stretched to g-1 yields exactly the graph stretch_to_girth
/// would reach from the original with the same generator stream.
std::size_t stretch_in_place(Graph& g, std::size_t target_girth, Rng& rng);

/// G(n, p): every unordered pair independently with probability p, pairs
/// visited in lexicographic order.
Graph erdos_renyi(std::size_t node_count, double p, Rng& rng);

/// Replaces node v by one node per neighbour set, each wired to exactly its
/// set. The first replacement keeps index v, the rest are appended as
/// node_count, node_count+1, ... The sets must lie within N_G(v) and cover it.
Graph split_dynamic_node(const Graph& g, NodeId v,
                         const std::vector<std::set<NodeId>>& neighbour_sets);

// ---------------------------------------------------------------------------
// Edge-list text format: "n <count>" then "u v" per line, '#' comments.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace recon
