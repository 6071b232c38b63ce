#include "recon/knowledge.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace recon {

Rational observed_sum(const Observation& observation, const GroundTruth& truth) {
  Rational total = 0;
  for (const auto& entry : observation.entries) {
    total += truth.value(entry);
  }
  return total;
}

AdversarialKnowledge::AdversarialKnowledge(AdversaryView view)
    : view_(std::move(view)),
      version_(view_.neighbour_count(), 0),
      dirty_(view_.neighbour_count(), false),
      observed_(view_.neighbour_count(), false) {}

void AdversarialKnowledge::record_update(std::size_t neighbour) {
  if (neighbour >= view_.neighbour_count()) {
    throw std::out_of_range("unknown neighbour " + std::to_string(neighbour));
  }
  dirty_[neighbour] = true;
}

const Observation& AdversarialKnowledge::record_summation(std::size_t adversary,
                                                          std::optional<Rational> sum) {
  if (adversary >= view_.adversary_count()) {
    throw std::out_of_range("unknown adversary " + std::to_string(adversary));
  }
  return record_summation_over(adversary, view_.neighbours_of(adversary), std::move(sum));
}

const Observation& AdversarialKnowledge::record_summation_over(
    std::size_t adversary, const std::vector<std::size_t>& subset, std::optional<Rational> sum) {
  if (adversary >= view_.adversary_count()) {
    throw std::out_of_range("unknown adversary " + std::to_string(adversary));
  }
  if (subset.empty()) {
    throw std::invalid_argument("adversary " + std::to_string(adversary) +
                                " has no neighbours to sum over");
  }
  std::vector<std::size_t> members = subset;
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("a summation includes each neighbour at most once");
  }
  for (const auto nu : members) {
    if (nu >= view_.neighbour_count() || !view_.adjacent(adversary, nu)) {
      throw std::invalid_argument("neighbour " + std::to_string(nu) +
                                  " is not adjacent to adversary " + std::to_string(adversary));
    }
  }

  Observation observation{adversary, {}, std::move(sum)};
  observation.entries.reserve(members.size());
  for (const auto nu : members) {
    if (dirty_[nu]) {
      if (observed_[nu]) {
        ++version_[nu];
      }
      dirty_[nu] = false;
    }
    observed_[nu] = true;
    observation.entries.push_back({nu, version_[nu]});
  }
  observations_.push_back(std::move(observation));
  return observations_.back();
}

std::size_t AdversarialKnowledge::column_of(VersionedNeighbour key) const {
  return key.neighbour * summation_count() + key.version;
}

RationalMatrix AdversarialKnowledge::to_matrix() const {
  const std::size_t t = summation_count();
  if (t == 0) {
    return RationalMatrix(0, 0);
  }
  RationalMatrix a(t, view_.neighbour_count() * t);
  for (std::size_t tau = 0; tau < t; ++tau) {
    for (const auto& entry : observations_[tau].entries) {
      a(tau, column_of(entry)) = 1;
    }
  }
  return a;
}

SparseRow AdversarialKnowledge::sparse_row(const Observation& observation) const {
  SparseRow row;
  row.reserve(observation.entries.size());
  const std::size_t n = view_.neighbour_count();
  for (const auto& entry : observation.entries) {
    row.emplace_back(entry.version * n + entry.neighbour, 1);
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

VersionedNeighbour AdversarialKnowledge::variable_of_sparse_key(std::size_t key) const {
  const std::size_t n = view_.neighbour_count();
  return {key % n, key / n};
}

std::vector<ReconstructedValue> reconstruct(const AdversarialKnowledge& knowledge) {
  const auto& observations = knowledge.observations();
  std::vector<Rational> sums;
  sums.reserve(observations.size());
  for (std::size_t tau = 0; tau < observations.size(); ++tau) {
    if (!observations[tau].sum) {
      throw std::invalid_argument("summation " + std::to_string(tau) +
                                  " has no observed sum; cannot reconstruct values");
    }
    sums.push_back(*observations[tau].sum);
  }

  const std::size_t t = knowledge.summation_count();
  std::vector<ReconstructedValue> out;
  for (auto& solution : partial_solutions(knowledge.to_matrix())) {
    Rational value = 0;
    for (std::size_t tau = 0; tau < t; ++tau) {
      value += solution.coefficients[tau] * sums[tau];
    }
    const VersionedNeighbour variable{solution.variable_index / t, solution.variable_index % t};
    out.push_back({variable, std::move(value), std::move(solution.coefficients)});
  }
  return out;
}

RationalMatrix augment_with_self_knowledge(const RationalMatrix& a, const RationalMatrix& r,
                                           std::size_t t, std::size_t k) {
  if (a.rows() != t || r.rows() != t || r.cols() != t * k) {
    throw ShapeError("self-knowledge blocks: A needs " + std::to_string(t) + " rows and R " +
                     std::to_string(t) + "x" + std::to_string(t * k) + ", got A " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ", R " +
                     std::to_string(r.rows()) + "x" + std::to_string(r.cols()));
  }
  const std::size_t own = t * k;
  RationalMatrix out(t + own, a.cols() + own);
  for (std::size_t row = 0; row < t; ++row) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(row, c) = a(row, c);
    }
    for (std::size_t c = 0; c < own; ++c) {
      out(row, a.cols() + c) = r(row, c);
    }
  }
  for (std::size_t i = 0; i < own; ++i) {
    out(t + i, a.cols() + i) = 1;
  }
  return out;
}

}  // namespace recon
