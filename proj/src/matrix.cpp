#include "recon/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace recon {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw ShapeError("ragged initializer: every row needs " + std::to_string(cols_) +
                       " entries");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                                         std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) {
    m.append_row(r);
  }
  return m;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw ShapeError("row of length " + std::to_string(values.size()) +
                     " does not fit a matrix with " + std::to_string(cols_) + " columns");
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

bool RationalMatrix::is_binary() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return q == 0 || q == 1; });
}

std::size_t RationalMatrix::nonzeros_in_row(std::size_t r) const {
  const auto values = row(r);
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](const Rational& q) { return q != 0; }));
}

std::vector<Rational> RationalMatrix::left_multiply(std::span<const Rational> y) const {
  if (y.size() != rows_) {
    throw ShapeError("coefficient vector of length " + std::to_string(y.size()) +
                     " cannot combine " + std::to_string(rows_) + " rows");
  }
  std::vector<Rational> out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (y[r] == 0) {
      continue;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0) {
        out[c] += y[r] * (*this)(r, c);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw ShapeError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RationalMatrix RationalMatrix::without_zero_columns() const {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if ((*this)(r, c) != 0) {
        keep.push_back(c);
        break;
      }
    }
  }
  RationalMatrix out(rows_, keep.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      out(r, j) = (*this)(r, keep[j]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c == 0 ? "" : ", ") << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace recon
