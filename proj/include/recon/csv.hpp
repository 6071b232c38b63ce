#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "recon/attack.hpp"
#include "recon/averaging.hpp"

namespace recon {

// All writers emit a header row, LF line endings and fixed six-decimal
// numbers so reruns compare byte for byte. Missing values print as NA.

std::string format_number(std::optional<double> value);

/// k,n,m,samples,mean_fraction,p_ge_1,mean_rounds,truncation_rate,seed
/// mean_rounds is the summations-per-adversary reading.
void write_grid_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

/// k,n,count_reconstructed,probability
void write_marginal_csv(std::ostream& out, const std::vector<MarginalRow>& rows);

/// Every rounds reading per cell, for cells that ran attacks.
void write_rounds_detail_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

/// p,girth,reps,mean_rounds,stddev_rounds,cap_exceeded,seed
void write_convergence_csv(std::ostream& out, const ConvergenceStudy& study);

/// girth followed by one mean_rounds column per p.
void write_convergence_plot_data(std::ostream& out, const ConvergenceStudy& study);

}  // namespace recon
