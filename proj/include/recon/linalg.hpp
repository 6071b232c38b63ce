#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "recon/matrix.hpp"

namespace recon {

struct RrefResult {
  RationalMatrix reduced;    // R
  RationalMatrix transform;  // B, with B * A == R
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
///
/// Pivots are the first non-zero entry scanning columns left to right and
/// rows top to bottom. The transform starts as the identity and receives
/// every row operation applied to A, so it is square, invertible and
/// satisfies transform * A == reduced exactly.
RrefResult rref(const RationalMatrix& a);

/// A row vector y over the rows of A such that y * A is non-zero only at
/// `variable_index`.
struct PartialSolution {
  std::size_t variable_index = 0;
  std::vector<Rational> coefficients;

  friend bool operator==(const PartialSolution&, const PartialSolution&) = default;
};

/// Every variable that some linear combination of the rows isolates, with
/// the combination taken from the matching row of the rref transform.
/// Sorted by variable index.
std::vector<PartialSolution> partial_solutions(const RationalMatrix& a);

/// Indices appearing in `partial_solutions(a)`.
std::set<std::size_t> solvable_variables(const RationalMatrix& a);

/// Rank by fraction-free (Bareiss) elimination over the integers; rows are
/// first scaled by the lcm of their denominators.
std::size_t bareiss_rank(const RationalMatrix& a);

/// { i : rank([A; e_i]) == rank(A) }, computed with bareiss_rank only.
/// Independent of rref(), used to cross-check partial_solutions.
std::set<std::size_t> solvable_set_oracle(const RationalMatrix& a);

/// Collapses each neighbour's block of `rounds` version columns into one:
/// result(tau, nu) = sum_i a(tau, nu * rounds + i).
RationalMatrix merge_columns(const RationalMatrix& a, std::size_t neighbours,
                             std::size_t rounds);

struct DedupResult {
  RationalMatrix rows;
  std::vector<Rational> coefficients;
};

/// Keeps the first copy of every distinct row whose coefficients, summed over
/// all identical rows, are non-zero. coefficients * rows == y * a.
DedupResult dedup_rows(const RationalMatrix& a, std::span<const Rational> y);

// ---------------------------------------------------------------------------

/// Sparse row: (column, value) pairs sorted by column, no stored zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Row-by-row elimination that keeps every pivot column cleared in all other
/// rows. A variable is solvable iff some stored row has a single entry, the
/// same criterion as on a full rref; the basis is reached incrementally so a
/// simulation can test after every new observation without re-eliminating.
class IncrementalRref {
 public:
  /// Returns true when the row was independent of the stored ones.
  bool add_row(SparseRow row);

  std::size_t rank() const noexcept { return rows_.size(); }
  bool has_partial_solution() const noexcept { return singletons_ > 0; }
  std::set<std::size_t> solved_variables() const;
  const std::vector<SparseRow>& basis() const noexcept { return rows_; }

 private:
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
  std::size_t singletons_ = 0;
};

SparseRow to_sparse(std::span<const Rational> dense);

}  // namespace recon
