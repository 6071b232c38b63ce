#include <fstream>
#include <sstream>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::optional<std::size_t> parse_index(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<Graph> graph;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream stream(line);
    std::vector<std::string> fields;
    for (std::string token; stream >> token;) {
      fields.push_back(token);
    }
    if (fields.empty()) {
      continue;
    }
    if (!graph) {
      const auto count = fields.size() == 2 && fields[0] == "n" ? parse_index(fields[1])
                                                                : std::nullopt;
      if (!count) {
        throw ParseError(number, "expected header 'n <node_count>'");
      }
      graph.emplace(*count);
      continue;
    }
    const auto u = fields.size() == 2 ? parse_index(fields[0]) : std::nullopt;
    const auto v = fields.size() == 2 ? parse_index(fields[1]) : std::nullopt;
    if (!u || !v) {
      throw ParseError(number, "expected an edge 'u v' of node indices");
    }
    if (*u >= graph->node_count() || *v >= graph->node_count()) {
      throw ParseError(number, "edge endpoint outside a graph of " +
                                   std::to_string(graph->node_count()) + " nodes");
    }
    if (*u == *v) {
      throw ParseError(number, "self-loop on node " + std::to_string(*u));
    }
    if (!graph->add_edge(*u, *v)) {
      throw ParseError(number, "duplicate edge " + std::to_string(*u) + " " + std::to_string(*v));
    }
  }
  if (!graph) {
    throw ParseError(number, "missing header 'n <node_count>'");
  }
  return *graph;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open graph file '" + path + "'");
  }
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.node_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write graph file '" + path + "'");
  }
  write_edge_list(out, g);
}

}  // namespace recon
