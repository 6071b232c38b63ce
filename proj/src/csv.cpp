#include "recon/csv.hpp"

#include <cstdio>
#include <map>
#include <ostream>

namespace recon {

std::string format_number(std::optional<double> value) {
  if (!value) {
    return "NA";
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", *value);
  return buffer;
}

namespace {

std::string format_probability(double p) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", p);
  return buffer;
}

}  // namespace

void write_grid_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "k,n,m,samples,mean_fraction,p_ge_1,mean_rounds,truncation_rate,seed\n";
  for (const auto& r : records) {
    out << r.params.adversaries << ',' << r.params.neighbours << ',' << r.params.edges << ','
        << r.samples_requested << ',';
    if (!r.feasible) {
      out << "NA,NA,NA,NA," << r.seed << '\n';
      continue;
    }
    const auto mean_rounds =
        r.has_rounds ? r.mean_summations_per_adversary() : std::optional<double>{};
    out << format_number(r.mean_fraction()) << ',' << format_number(r.p_at_least_one()) << ','
        << format_number(mean_rounds) << ',' << format_number(r.truncation_rate()) << ','
        << r.seed << '\n';
  }
}

void write_marginal_csv(std::ostream& out, const std::vector<MarginalRow>& rows) {
  out << "k,n,count_reconstructed,probability\n";
  for (const auto& row : rows) {
    out << row.adversaries << ',' << row.neighbours << ',' << row.count << ','
        << format_number(row.probability) << '\n';
  }
}

void write_rounds_detail_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "k,n,m,solvable_views,runs,truncated,mean_total_rounds,mean_adversary_summations,"
         "mean_summations_per_adversary,seed\n";
  for (const auto& r : records) {
    if (!r.feasible || r.runs.empty()) {
      continue;
    }
    std::size_t truncated = 0;
    for (const auto& run : r.runs) {
      truncated += run.rounds ? 0 : 1;
    }
    out << r.params.adversaries << ',' << r.params.neighbours << ',' << r.params.edges << ','
        << r.solvable_views() << ',' << r.runs.size() << ',' << truncated << ','
        << format_number(r.mean_total_rounds()) << ','
        << format_number(r.mean_adversary_summations()) << ','
        << format_number(r.mean_summations_per_adversary()) << ',' << r.seed << '\n';
  }
}

void write_convergence_csv(std::ostream& out, const ConvergenceStudy& study) {
  out << "p,girth,reps,mean_rounds,stddev_rounds,cap_exceeded,seed\n";
  for (const auto& cell : study.cells) {
    out << format_probability(cell.p) << ',' << cell.girth << ',' << cell.rounds.size() << ','
        << format_number(cell.mean_rounds()) << ',' << format_number(cell.stddev_rounds()) << ','
        << cell.cap_exceeded() << ',' << cell.seed << '\n';
  }
}

void write_convergence_plot_data(std::ostream& out, const ConvergenceStudy& study) {
  std::vector<double> ps;
  std::map<std::size_t, std::vector<std::optional<double>>> by_girth;
  for (const auto& cell : study.cells) {
    if (ps.empty() || ps.back() != cell.p) {
      ps.push_back(cell.p);
    }
    by_girth[cell.girth].push_back(cell.mean_rounds());
  }
  out << "girth";
  for (const auto p : ps) {
    out << ",mean_rounds_p" << format_probability(p);
  }
  out << '\n';
  for (const auto& [g, means] : by_girth) {
    out << g;
    for (const auto& mean : means) {
      out << ',' << format_number(mean);
    }
    out << '\n';
  }
}

}  // namespace recon
