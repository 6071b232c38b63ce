#include "recon/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

namespace recon {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges) : adjacency_(node_count) {
  for (const auto& e : edges) {
    add_edge(e.u, e.v);
  }
}

void Graph::check_node(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("node " + std::to_string(v) + " outside graph of " +
                            std::to_string(adjacency_.size()) + " nodes");
  }
}

bool Graph::add_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (a == b) {
    throw std::invalid_argument("self-loop on node " + std::to_string(a));
  }
  auto& list = adjacency_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b);
  if (it != list.end() && *it == b) {
    return false;
  }
  list.insert(it, b);
  auto& other = adjacency_[b];
  other.insert(std::lower_bound(other.begin(), other.end(), a), a);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  auto& list = adjacency_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b);
  if (it == list.end() || *it != b) {
    return false;
  }
  list.erase(it);
  auto& other = adjacency_[b];
  other.erase(std::lower_bound(other.begin(), other.end(), a));
  --edge_count_;
  return true;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (const NodeId v : adjacency_[u]) {
      if (u < v) {
        out.push_back({u, v});
      }
    }
  }
  return out;
}

std::set<NodeId> neighbours(const Graph& g, NodeId v) {
  if (v >= g.node_count()) {
    throw std::out_of_range("node " + std::to_string(v) + " outside graph of " +
                            std::to_string(g.node_count()) + " nodes");
  }
  const auto& list = g.adjacent(v);
  return {list.begin(), list.end()};
}

std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.node_count(), unset);
  std::size_t next = 0;
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (label[root] != unset) {
      continue;
    }
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (const NodeId w : g.adjacent(u)) {
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

// ---------------------------------------------------------------------------

AdversaryView::AdversaryView(std::vector<NodeId> adversary_labels,
                             std::vector<NodeId> neighbour_labels,
                             const std::vector<std::vector<bool>>& biadjacency)
    : adversary_labels_(std::move(adversary_labels)),
      neighbour_labels_(std::move(neighbour_labels)),
      adversary_neighbours_(adversary_labels_.size()) {
  if (biadjacency.size() != adversary_labels_.size()) {
    throw ShapeError("biadjacency needs one row per adversary");
  }
  for (std::size_t c = 0; c < biadjacency.size(); ++c) {
    if (biadjacency[c].size() != neighbour_labels_.size()) {
      throw ShapeError("biadjacency needs one column per neighbour");
    }
    for (std::size_t nu = 0; nu < neighbour_labels_.size(); ++nu) {
      if (biadjacency[c][nu]) {
        adversary_neighbours_[c].push_back(nu);
        ++edge_count_;
      }
    }
  }
}

bool AdversaryView::adjacent(std::size_t adversary, std::size_t neighbour) const {
  const auto& list = adversary_neighbours_.at(adversary);
  return std::binary_search(list.begin(), list.end(), neighbour);
}

std::size_t AdversaryView::neighbour_degree(std::size_t neighbour) const {
  std::size_t degree = 0;
  for (const auto& list : adversary_neighbours_) {
    degree += std::binary_search(list.begin(), list.end(), neighbour) ? 1 : 0;
  }
  return degree;
}

RationalMatrix AdversaryView::biadjacency_matrix() const {
  RationalMatrix m(adversary_count(), neighbour_count());
  for (std::size_t c = 0; c < adversary_count(); ++c) {
    for (const auto nu : adversary_neighbours_[c]) {
      m(c, nu) = 1;
    }
  }
  return m;
}

AdversaryView adversary_view(const Graph& g, const std::set<NodeId>& adversaries) {
  std::set<NodeId> outside;
  for (const NodeId c : adversaries) {
    for (const NodeId w : neighbours(g, c)) {
      if (!adversaries.contains(w)) {
        outside.insert(w);
      }
    }
  }
  std::vector<NodeId> adversary_labels(adversaries.begin(), adversaries.end());
  std::vector<NodeId> neighbour_labels(outside.begin(), outside.end());
  std::vector<std::vector<bool>> biadjacency(adversary_labels.size(),
                                             std::vector<bool>(neighbour_labels.size()));
  for (std::size_t c = 0; c < adversary_labels.size(); ++c) {
    for (std::size_t nu = 0; nu < neighbour_labels.size(); ++nu) {
      biadjacency[c][nu] = g.has_edge(adversary_labels[c], neighbour_labels[nu]);
    }
  }
  return {std::move(adversary_labels), std::move(neighbour_labels), biadjacency};
}

// ---------------------------------------------------------------------------

std::ostream& operator<<(std::ostream& os, const Girth& g) {
  if (g.is_acyclic()) {
    return os << "acyclic";
  }
  return os << g.value();
}

namespace {

constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();

struct CycleSearch {
  explicit CycleSearch(const Graph& graph)
      : g(graph), dist(graph.node_count(), kUnvisited), parent(graph.node_count(), kUnvisited) {}

  // BFS from `root`, improving `best` (exclusive upper bound on the length)
  // and `cycle` whenever a shorter closed walk through a non-tree edge is met.
  // At the global minimum such a walk is always a simple cycle.
  void search(NodeId root, std::size_t& best, std::vector<Edge>& cycle) {
    std::vector<NodeId> touched{root};
    std::queue<NodeId> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop();
      // Every candidate closed through u has length >= 2 * dist[u].
      if (2 * dist[u] >= best) {
        break;
      }
      for (const NodeId w : g.adjacent(u)) {
        if (w == parent[u]) {
          continue;
        }
        if (dist[w] == kUnvisited) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push(w);
        } else if (dist[u] + dist[w] + 1 < best) {
          best = dist[u] + dist[w] + 1;
          cycle = trace(root, u, w);
        }
      }
    }
    for (const NodeId v : touched) {
      dist[v] = kUnvisited;
      parent[v] = kUnvisited;
    }
  }

  std::vector<Edge> trace(NodeId root, NodeId u, NodeId w) const {
    std::vector<NodeId> down;  // root ... u
    for (NodeId x = u; x != root; x = parent[x]) {
      down.push_back(x);
    }
    down.push_back(root);
    std::reverse(down.begin(), down.end());
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < down.size(); ++i) {
      out.push_back(Edge::canonical(down[i], down[i + 1]));
    }
    out.push_back(Edge::canonical(u, w));
    for (NodeId x = w; x != root; x = parent[x]) {
      out.push_back(Edge::canonical(x, parent[x]));
    }
    return out;
  }

  const Graph& g;
  std::vector<std::size_t> dist;
  std::vector<NodeId> parent;
};

}  // namespace

std::optional<std::vector<Edge>> shortest_cycle_below(const Graph& g, std::size_t below,
                                                      std::size_t known_lower_bound) {
  CycleSearch search(g);
  std::size_t best = below;
  std::vector<Edge> cycle;
  for (NodeId root = 0; root < g.node_count() && best > known_lower_bound; ++root) {
    if (g.degree(root) >= 2) {
      search.search(root, best, cycle);
    }
  }
  if (cycle.empty()) {
    return std::nullopt;
  }
  return cycle;
}

std::optional<std::vector<Edge>> shortest_cycle(const Graph& g) {
  return shortest_cycle_below(g, std::numeric_limits<std::size_t>::max(), 3);
}

Girth girth(const Graph& g) {
  const auto cycle = shortest_cycle(g);
  return cycle ? Girth::finite(cycle->size()) : Girth::acyclic();
}

std::size_t stretch_in_place(Graph& g, std::size_t target_girth, Rng& rng) {
  if (target_girth < 3) {
    throw std::invalid_argument("target girth must be at least 3");
  }
  std::size_t removed = 0;
  std::size_t lower_bound = 3;
  while (auto cycle = shortest_cycle_below(g, target_girth, lower_bound)) {
    lower_bound = cycle->size();
    std::uniform_int_distribution<std::size_t> pick(0, cycle->size() - 1);
    const Edge victim = (*cycle)[pick(rng)];
    g.remove_edge(victim.u, victim.v);
    ++removed;
  }
  return removed;
}

Graph stretch_to_girth(const Graph& g, std::size_t target_girth, Rng& rng) {
  Graph out = g;
  stretch_in_place(out, target_girth, rng);
  return out;
}

Graph erdos_renyi(std::size_t node_count, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  Graph g(node_count);
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < node_count; ++u) {
    for (NodeId v = u + 1; v < node_count; ++v) {
      if (coin(rng)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph split_dynamic_node(const Graph& g, NodeId v,
                         const std::vector<std::set<NodeId>>& neighbour_sets) {
  if (neighbour_sets.empty()) {
    throw std::invalid_argument("split_dynamic_node: at least one neighbour set required");
  }
  const auto original = neighbours(g, v);
  std::set<NodeId> covered;
  for (const auto& set : neighbour_sets) {
    for (const NodeId w : set) {
      if (!original.contains(w)) {
        throw std::invalid_argument("split_dynamic_node: node " + std::to_string(w) +
                                    " is not a neighbour of " + std::to_string(v));
      }
      covered.insert(w);
    }
  }
  if (covered != original) {
    throw std::invalid_argument("split_dynamic_node: neighbour sets must cover N(v)");
  }

  const std::size_t n = g.node_count();
  Graph out(n + neighbour_sets.size() - 1);
  for (const auto& e : g.edges()) {
    if (e.u != v && e.v != v) {
      out.add_edge(e.u, e.v);
    }
  }
  for (std::size_t j = 0; j < neighbour_sets.size(); ++j) {
    const NodeId replacement = j == 0 ? v : n + j - 1;
    for (const NodeId w : neighbour_sets[j]) {
      out.add_edge(replacement, w);
    }
  }
  return out;
}

}  // namespace recon
