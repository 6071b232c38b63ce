#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "recon/rational.hpp"

namespace recon {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                                  std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Rational> values);

  bool is_zero() const;
  bool is_binary() const;
  std::size_t nonzeros_in_row(std::size_t r) const;

  // y * A, y a row vector of length rows().
  std::vector<Rational> left_multiply(std::span<const Rational> y) const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  // Copy with every all-zero column removed; the layout of compact examples.
  RationalMatrix without_zero_columns() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace recon
