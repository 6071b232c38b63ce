#include "recon/linalg.hpp"

#include <algorithm>
#include <string>

namespace recon {
namespace {

void scale_row(RationalMatrix& m, std::size_t r, const Rational& factor) {
  for (auto& q : m.row(r)) {
    if (q != 0) {
      q *= factor;
    }
  }
}

// m.row(target) -= factor * m.row(source)
void subtract_row(RationalMatrix& m, std::size_t target, std::size_t source,
                  const Rational& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(source, c) != 0) {
      m(target, c) -= factor * m(source, c);
    }
  }
}

}  // namespace

RrefResult rref(const RationalMatrix& a) {
  RrefResult out{a, RationalMatrix::identity(a.rows()), {}};
  auto& r = out.reduced;
  auto& b = out.transform;

  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < r.rows() && r(pivot_row, col) == 0) {
      ++pivot_row;
    }
    if (pivot_row == r.rows()) {
      continue;
    }
    r.swap_rows(pivot_row, lead);
    b.swap_rows(pivot_row, lead);

    if (r(lead, col) != 1) {
      const Rational inverse = 1 / r(lead, col);
      scale_row(r, lead, inverse);
      scale_row(b, lead, inverse);
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, col) == 0) {
        continue;
      }
      const Rational factor = r(i, col);
      subtract_row(r, i, lead, factor);
      subtract_row(b, i, lead, factor);
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  return out;
}

std::vector<PartialSolution> partial_solutions(const RationalMatrix& a) {
  const auto reduced = rref(a);
  std::vector<PartialSolution> out;
  for (std::size_t row = 0; row < reduced.pivot_columns.size(); ++row) {
    if (reduced.reduced.nonzeros_in_row(row) != 1) {
      continue;
    }
    const auto coefficients = reduced.transform.row(row);
    out.push_back({reduced.pivot_columns[row],
                   std::vector<Rational>(coefficients.begin(), coefficients.end())});
  }
  // Pivot columns increase with the row index, so `out` is already sorted.
  return out;
}

std::set<std::size_t> solvable_variables(const RationalMatrix& a) {
  std::set<std::size_t> out;
  for (const auto& solution : partial_solutions(a)) {
    out.insert(solution.variable_index);
  }
  return out;
}

std::size_t bareiss_rank(const RationalMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<mpz_class> m(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m[r * cols + c] = a(r, c).get_num() * (scale / a(r, c).get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return m[r * cols + c]; };

  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && at(pivot_row, col) == 0) {
      ++pivot_row;
    }
    if (pivot_row == rows) {
      continue;
    }
    if (pivot_row != rank) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::swap(at(pivot_row, c), at(rank, c));
      }
    }
    const mpz_class pivot = at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class below = at(i, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class value = pivot * at(i, c) - below * at(rank, c);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        at(i, c) = std::move(value);
      }
      at(i, col) = 0;
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

std::set<std::size_t> solvable_set_oracle(const RationalMatrix& a) {
  std::set<std::size_t> out;
  const std::size_t base = bareiss_rank(a);
  if (base == 0) {
    return out;
  }
  std::vector<Rational> unit(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    RationalMatrix stacked = a;
    unit[i] = 1;
    stacked.append_row(unit);
    unit[i] = 0;
    if (bareiss_rank(stacked) == base) {
      out.insert(i);
    }
  }
  return out;
}

RationalMatrix merge_columns(const RationalMatrix& a, std::size_t neighbours,
                             std::size_t rounds) {
  if (a.cols() != neighbours * rounds) {
    throw ShapeError("merge_columns: expected " + std::to_string(neighbours) + " x " +
                     std::to_string(rounds) + " columns, got " + std::to_string(a.cols()));
  }
  RationalMatrix out(a.rows(), neighbours);
  for (std::size_t tau = 0; tau < a.rows(); ++tau) {
    for (std::size_t nu = 0; nu < neighbours; ++nu) {
      for (std::size_t i = 0; i < rounds; ++i) {
        out(tau, nu) += a(tau, nu * rounds + i);
      }
    }
  }
  return out;
}

DedupResult dedup_rows(const RationalMatrix& a, std::span<const Rational> y) {
  if (y.size() != a.rows()) {
    throw ShapeError("dedup_rows: " + std::to_string(y.size()) + " coefficients for " +
                     std::to_string(a.rows()) + " rows");
  }
  // Group identical rows by first appearance.
  std::vector<std::size_t> representatives;
  std::vector<Rational> sums;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::size_t group = 0;
    while (group < representatives.size()) {
      const auto lhs = a.row(representatives[group]);
      const auto rhs = a.row(r);
      if (std::equal(lhs.begin(), lhs.end(), rhs.begin())) {
        break;
      }
      ++group;
    }
    if (group == representatives.size()) {
      representatives.push_back(r);
      sums.emplace_back(0);
    }
    sums[group] += y[r];
  }

  DedupResult out{RationalMatrix(0, a.cols()), {}};
  for (std::size_t g = 0; g < representatives.size(); ++g) {
    if (sums[g] == 0) {
      continue;
    }
    out.rows.append_row(a.row(representatives[g]));
    out.coefficients.push_back(sums[g]);
  }
  return out;
}

}  // namespace recon
