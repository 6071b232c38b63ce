#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cli_config.hpp"
#include "recon/attack.hpp"
#include "recon/audit.hpp"
#include "recon/averaging.hpp"
#include "recon/csv.hpp"
#include "recon/defence.hpp"
#include "recon/graph.hpp"

namespace {

using namespace recon;

struct Common {
  std::uint64_t seed = 0;
  std::string out = ".";
  std::size_t workers = 1;
};

struct GridArgs {
  std::string k = "3";
  std::string n = "3..15";
  std::string m;
  std::size_t samples = 1000;
  std::size_t max_rejections = kDefaultMaxRejections;
  std::size_t reps = 100;
  std::size_t max_rounds = 250;
};

struct GraphArgs {
  std::string graph;
  std::string random_graph;  // "<nodes>,<p>"
};

struct DefenceArgs {
  std::size_t k = 0;
  std::size_t trials = 0;
  std::size_t rounds = 500;
};

struct StretchArgs {
  std::size_t girth = 0;
  std::size_t break_cycles = 0;
  std::string output;
};

struct ConvergeArgs {
  std::size_t nodes = 50;
  std::string p = "0.1,0.5,0.9";
  std::string girths = "3..25";
  std::size_t reps = 1000;
  std::size_t cap = 1'000'000;
  double threshold = 1.0;
};

std::filesystem::path output_path(const Common& common, const std::string& name) {
  std::filesystem::create_directories(common.out);
  return std::filesystem::path(common.out) / name;
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  writer(out);
  std::cout << "wrote " << path.string() << "\n";
}

GridSpec grid_spec(const Common& common, const GridArgs& args) {
  GridSpec spec;
  spec.adversaries = cli::parse_size_list(args.k);
  spec.neighbours = cli::parse_size_list(args.n);
  if (!args.m.empty()) {
    spec.edges = cli::parse_size_list(args.m);
  }
  if (spec.adversaries.front() == 0 || spec.neighbours.front() == 0) {
    throw CLI::ValidationError("--k/--n", "counts must be at least 1");
  }
  if (args.samples == 0) {
    throw CLI::ValidationError("--samples", "must be at least 1");
  }
  spec.samples = args.samples;
  spec.seed = common.seed;
  spec.workers = common.workers;
  spec.max_rejections = args.max_rejections;
  return spec;
}

void print_marginal_summary(const std::vector<ExperimentRecord>& records) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& r : records) {
    const auto key = std::pair{r.params.adversaries, r.params.neighbours};
    if (!seen.insert(key).second) {
      continue;
    }
    std::cout << "k=" << key.first << " n=" << key.second << " P(>=1 reconstructed)="
              << format_number(marginal_p_at_least_one(records, key.first, key.second)) << "\n";
  }
}

int cmd_attack_grid(const Common& common, const GridArgs& args) {
  const auto records = run_fraction_grid(grid_spec(common, args));
  write_file(output_path(common, "attack_grid.csv"),
             [&](std::ostream& o) { write_grid_csv(o, records); });
  write_file(output_path(common, "attack_marginal.csv"),
             [&](std::ostream& o) { write_marginal_csv(o, marginal_distribution(records)); });
  print_marginal_summary(records);
  return 0;
}

int cmd_rounds_grid(const Common& common, const GridArgs& args) {
  if (args.max_rounds == 0 || args.reps == 0) {
    throw CLI::ValidationError("--max-rounds/--reps", "must be at least 1");
  }
  const auto records =
      run_rounds_grid(grid_spec(common, args), RoundsSpec{args.reps, args.max_rounds});
  write_file(output_path(common, "rounds_grid.csv"),
             [&](std::ostream& o) { write_grid_csv(o, records); });
  write_file(output_path(common, "rounds_detail.csv"),
             [&](std::ostream& o) { write_rounds_detail_csv(o, records); });
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& r : records) {
    const auto key = std::pair{r.params.adversaries, r.params.neighbours};
    if (!seen.insert(key).second) {
      continue;
    }
    const auto pooled = pool_rounds(records, key.first, key.second);
    std::cout << "k=" << key.first << " n=" << key.second << " runs=" << pooled.runs
              << " truncated=" << pooled.truncated
              << " summations_per_adversary=" << format_number(pooled.mean_summations_per_adversary)
              << " adversary_summations=" << format_number(pooled.mean_adversary_summations)
              << " total_rounds=" << format_number(pooled.mean_total_rounds) << "\n";
  }
  return 0;
}

Graph load_graph(const Common& common, const GraphArgs& args) {
  if (args.graph.empty() == args.random_graph.empty()) {
    throw CLI::ValidationError("--graph", "give exactly one of --graph and --random-graph");
  }
  if (!args.graph.empty()) {
    return read_edge_list_file(args.graph);
  }
  const auto comma = args.random_graph.find(',');
  if (comma == std::string::npos) {
    throw CLI::ValidationError("--random-graph", "expected '<nodes>,<p>'");
  }
  const auto nodes = cli::parse_size_list(args.random_graph.substr(0, comma));
  const auto ps = cli::parse_double_list(args.random_graph.substr(comma + 1));
  if (nodes.size() != 1 || ps.size() != 1 || ps[0] < 0.0 || ps[0] > 1.0) {
    throw CLI::ValidationError("--random-graph", "expected '<nodes>,<p>' with 0 <= p <= 1");
  }
  Rng rng(derive_seed(common.seed, {0x72616e64}));  // "rand"
  return erdos_renyi(nodes[0], ps[0], rng);
}

int cmd_defence(const Common& common, const GraphArgs& graph_args, const DefenceArgs& args) {
  const Graph g = load_graph(common, graph_args);
  const auto certificate = certify(g);
  std::cout << certificate;
  std::cout << "k " << args.k << ": " << (certificate.covers(args.k) ? "safe" : "not certified")
            << "\n";
  if (args.trials > 0) {
    Rng rng(derive_seed(common.seed, {0x76657269, args.k}));  // "veri"
    std::cout << verify_no_partial_solutions(g, args.k, args.trials, args.rounds, rng);
  }
  return 0;
}

int cmd_stretch(const Common& common, const GraphArgs& graph_args, const StretchArgs& args) {
  if ((args.girth == 0) == (args.break_cycles == 0)) {
    throw CLI::ValidationError("--girth", "give exactly one of --girth and --break-cycles");
  }
  if (args.girth != 0 && args.girth < 3) {
    throw CLI::ValidationError("--girth", "target girth must be at least 3");
  }
  if (args.break_cycles != 0 && args.break_cycles < 3) {
    throw CLI::ValidationError("--break-cycles", "maximum cycle length must be at least 3");
  }
  const Graph g = load_graph(common, graph_args);
  Rng rng(derive_seed(common.seed, {0x73747265}));  // "stre"
  Graph result;
  if (args.girth != 0) {
    result = stretch_to_girth(g, args.girth, rng);
  } else {
    CycleBreakingStats stats;
    result = break_short_cycles(g, args.break_cycles, rng, &stats);
    std::cout << "passes " << stats.passes << ", removed edges " << stats.removed_edges
              << ", messages " << stats.messages << "\n";
  }
  const auto path = args.output.empty() ? output_path(common, "stretched.txt")
                                        : std::filesystem::path(args.output);
  write_file(path, [&](std::ostream& o) { write_edge_list(o, result); });
  std::cout << "edges " << g.edge_count() << " -> " << result.edge_count() << ", girth "
            << girth(result) << "\n";
  return 0;
}

int cmd_converge(const Common& common, const ConvergeArgs& args) {
  ConvergenceStudySpec spec;
  spec.nodes = args.nodes;
  spec.probabilities = cli::parse_double_list(args.p);
  spec.girths = cli::parse_size_list(args.girths);
  spec.reps = args.reps;
  spec.cap = args.cap;
  spec.threshold = args.threshold;
  spec.seed = common.seed;
  spec.workers = common.workers;
  for (const auto p : spec.probabilities) {
    if (p <= 0.0 || p > 1.0) {
      throw CLI::ValidationError("--p", "edge probabilities must lie in (0, 1]");
    }
  }
  if (spec.girths.front() < 3 || spec.reps == 0 || spec.cap == 0 || spec.nodes < 2) {
    throw CLI::ValidationError("--girths/--reps/--cap/--nodes", "out of range");
  }
  const auto study = run_convergence_study(spec);
  write_file(output_path(common, "convergence.csv"),
             [&](std::ostream& o) { write_convergence_csv(o, study); });
  write_file(output_path(common, "convergence_plot.csv"),
             [&](std::ostream& o) { write_convergence_plot_data(o, study); });
  for (std::size_t i = 0; i < spec.probabilities.size(); ++i) {
    std::cout << "p=" << spec.probabilities[i] << " disconnected samples redrawn "
              << study.resamples[i] << "\n";
  }
  std::size_t exceeded = 0;
  for (const auto& cell : study.cells) {
    exceeded += cell.cap_exceeded();
  }
  std::cout << "runs exceeding the cap of " << spec.cap << " rounds: " << exceeded
            << " (excluded from means)\n";
  return 0;
}

int cmd_audit(const std::string& file) {
  const auto log = parse_audit_file(file);
  const auto report = analyse_audit(log);
  print_audit_report(std::cout, log, report);
  return report.consistent ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> raw(argv, argv + argc);
  std::vector<std::string> args;
  try {
    args = cli::expand_config(raw);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Reconstruction attacks on summation protocols and the girth defence"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "master seed");
  app.add_option("--out", common.out, "output directory");
  app.add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);

  GridArgs grid;
  const auto add_grid_options = [&grid](CLI::App* sub) {
    sub->add_option("--k", grid.k, "adversary counts, e.g. 3 or 3,5,7");
    sub->add_option("--n", grid.n, "neighbour counts, e.g. 3..15");
    sub->add_option("--m", grid.m, "edge counts (default: every count the grid can hold)");
    sub->add_option("--samples", grid.samples, "views per cell");
    sub->add_option("--max-rejections", grid.max_rejections, "rejection bound per view");
  };
  auto* attack = app.add_subcommand("attack-grid", "static reconstruction fraction grid");
  add_grid_options(attack);
  auto* rounds = app.add_subcommand("rounds-grid", "asynchronous rounds until first success");
  add_grid_options(rounds);
  rounds->add_option("--reps", grid.reps, "attacks per solvable view");
  rounds->add_option("--max-rounds", grid.max_rounds, "truncation bound");

  GraphArgs graph;
  const auto add_graph_options = [&graph](CLI::App* sub) {
    sub->add_option("--graph", graph.graph, "edge-list file");
    sub->add_option("--random-graph", graph.random_graph,
                    "G(n, p) sample from the master seed, as '<nodes>,<p>'");
  };
  DefenceArgs defence;
  auto* defence_cmd = app.add_subcommand("defence-check", "girth certificate and verification");
  add_graph_options(defence_cmd);
  defence_cmd->add_option("--k", defence.k, "collusion size")->required();
  defence_cmd->add_option("--trials", defence.trials, "random placements to simulate");
  defence_cmd->add_option("--rounds", defence.rounds, "rounds per placement");

  StretchArgs stretch;
  auto* stretch_cmd = app.add_subcommand("stretch", "raise girth by removing cycle edges");
  add_graph_options(stretch_cmd);
  stretch_cmd->add_option("--girth", stretch.girth, "target girth");
  stretch_cmd->add_option("--break-cycles", stretch.break_cycles,
                          "flood-based removal of cycles up to this length");
  stretch_cmd->add_option("--output", stretch.output, "edge-list file to write");

  ConvergeArgs converge;
  auto* converge_cmd = app.add_subcommand("converge", "averaging rounds versus girth");
  converge_cmd->add_option("--nodes", converge.nodes, "graph size");
  converge_cmd->add_option("--p", converge.p, "edge probabilities");
  converge_cmd->add_option("--girths", converge.girths, "target girths");
  converge_cmd->add_option("--reps", converge.reps, "repetitions per cell");
  converge_cmd->add_option("--cap", converge.cap, "round cap per run");
  converge_cmd->add_option("--threshold", converge.threshold, "max - min at convergence");

  std::string audit_file;
  auto* audit_cmd = app.add_subcommand("audit", "find values leaked by a summation log");
  audit_cmd->add_option("file", audit_file, "query-audit file")->required();

  std::vector<char*> pointers;
  for (auto& arg : args) {
    pointers.push_back(arg.data());
  }
  try {
    app.parse(static_cast<int>(pointers.size()), pointers.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*attack) return cmd_attack_grid(common, grid);
    if (*rounds) return cmd_rounds_grid(common, grid);
    if (*defence_cmd) return cmd_defence(common, graph, defence);
    if (*stretch_cmd) return cmd_stretch(common, graph, stretch);
    if (*converge_cmd) return cmd_converge(common, converge);
    if (*audit_cmd) return cmd_audit(audit_file);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
