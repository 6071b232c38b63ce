#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "recon/graph.hpp"
#include "recon/linalg.hpp"
#include "recon/matrix.hpp"

namespace recon {

/// The i-th distinct private value of neighbour nu seen by the adversaries.
struct VersionedNeighbour {
  std::size_t neighbour = 0;
  std::size_t version = 0;

  auto operator<=>(const VersionedNeighbour&) const = default;
};

/// One summation: the adversary that ran it, the values it covered (sorted by
/// neighbour, each neighbour at most once) and, optionally, the observed sum.
struct Observation {
  std::size_t adversary = 0;
  std::vector<VersionedNeighbour> entries;
  std::optional<Rational> sum;
};

/// Private values per (neighbour, version).
class GroundTruth {
 public:
  void set(VersionedNeighbour key, Rational value) { values_[key] = std::move(value); }
  bool contains(VersionedNeighbour key) const { return values_.contains(key); }
  /// Throws std::out_of_range for an unknown key.
  const Rational& value(VersionedNeighbour key) const { return values_.at(key); }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::map<VersionedNeighbour, Rational> values_;
};

Rational observed_sum(const Observation& observation, const GroundTruth& truth);

/// The system A theta = Theta accumulated by colluding adversaries.
///
/// Columns are versioned: a neighbour's version is bumped lazily, at the
/// first summation that includes it after an update, so any number of
/// updates between two observations coalesce into one new column, and
/// updates before the first observation create none.
class AdversarialKnowledge {
 public:
  explicit AdversarialKnowledge(AdversaryView view);

  const AdversaryView& view() const noexcept { return view_; }
  const std::vector<Observation>& observations() const noexcept { return observations_; }
  std::size_t summation_count() const noexcept { return observations_.size(); }

  std::size_t current_version(std::size_t neighbour) const { return version_.at(neighbour); }
  bool dirty(std::size_t neighbour) const { return dirty_.at(neighbour); }

  /// Throws std::out_of_range for an unknown neighbour.
  void record_update(std::size_t neighbour);

  /// Appends a row over every view neighbour of `adversary`. Throws
  /// std::out_of_range for an unknown adversary and std::invalid_argument
  /// when the adversary has no neighbours to sum.
  const Observation& record_summation(std::size_t adversary,
                                      std::optional<Rational> sum = std::nullopt);

  /// Summation over an explicit subset of the adversary's view neighbours,
  /// for an adversary whose neighbourhood changes between rounds.
  const Observation& record_summation_over(std::size_t adversary,
                                           const std::vector<std::size_t>& subset,
                                           std::optional<Rational> sum = std::nullopt);

  /// Sets the observed sum of summation `row`. Throws std::out_of_range.
  void attach_sum(std::size_t row, Rational sum) { observations_.at(row).sum = std::move(sum); }

  /// t x (n * t) 0/1 matrix, column nu * t + i for version i of neighbour nu.
  RationalMatrix to_matrix() const;

  /// Column of `key` in to_matrix().
  std::size_t column_of(VersionedNeighbour key) const;

  /// Observation as a sparse row keyed by version * n + neighbour. The key
  /// does not depend on how many summations follow, which suits
  /// IncrementalRref.
  SparseRow sparse_row(const Observation& observation) const;
  VersionedNeighbour variable_of_sparse_key(std::size_t key) const;

 private:
  AdversaryView view_;
  std::vector<Observation> observations_;
  std::vector<std::size_t> version_;
  std::vector<bool> dirty_;
  std::vector<bool> observed_;
};

struct ReconstructedValue {
  VersionedNeighbour variable;
  Rational value;
  std::vector<Rational> coefficients;
};

/// theta_i = y * Theta for every partial solution y of to_matrix(K).
/// Throws std::invalid_argument when some observation lacks its sum.
std::vector<ReconstructedValue> reconstruct(const AdversarialKnowledge& knowledge);

/// [[A, R], [0, I_tk]]: knowledge extended with the adversaries' own values.
/// R must have A.rows() == t rows and t * k columns.
RationalMatrix augment_with_self_knowledge(const RationalMatrix& a, const RationalMatrix& r,
                                           std::size_t t, std::size_t k);

}  // namespace recon
