#include <algorithm>

#include "recon/linalg.hpp"

namespace recon {
namespace {

// target -= factor * source, both sorted by column.
void subtract_scaled(SparseRow& target, const Rational& factor, const SparseRow& source) {
  SparseRow merged;
  merged.reserve(target.size() + source.size());
  auto lhs = target.begin();
  auto rhs = source.begin();
  while (lhs != target.end() || rhs != source.end()) {
    if (rhs == source.end() || (lhs != target.end() && lhs->first < rhs->first)) {
      merged.push_back(std::move(*lhs++));
    } else if (lhs == target.end() || rhs->first < lhs->first) {
      merged.emplace_back(rhs->first, -factor * rhs->second);
      ++rhs;
    } else {
      Rational value = lhs->second - factor * rhs->second;
      if (value != 0) {
        merged.emplace_back(lhs->first, std::move(value));
      }
      ++lhs;
      ++rhs;
    }
  }
  target = std::move(merged);
}

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, std::size_t c) { return entry.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

}  // namespace

bool IncrementalRref::add_row(SparseRow row) {
  std::erase_if(row, [](const auto& entry) { return entry.second == 0; });
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Stored rows vanish on every pivot column but their own, so the factors
  // can all be read off the incoming row before any subtraction.
  std::vector<std::pair<std::size_t, Rational>> factors;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (const Rational* value = find_entry(row, pivots_[i])) {
      factors.emplace_back(i, *value);
    }
  }
  for (const auto& [i, factor] : factors) {
    subtract_scaled(row, factor, rows_[i]);
  }
  if (row.empty()) {
    return false;
  }

  const std::size_t pivot = row.front().first;
  if (row.front().second != 1) {
    const Rational inverse = 1 / row.front().second;
    for (auto& entry : row) {
      entry.second *= inverse;
    }
  }
  for (auto& stored : rows_) {
    const Rational* value = find_entry(stored, pivot);
    if (value == nullptr) {
      continue;
    }
    const Rational factor = *value;
    if (stored.size() == 1) {
      --singletons_;
    }
    subtract_scaled(stored, factor, row);
    if (stored.size() == 1) {
      ++singletons_;
    }
  }
  if (row.size() == 1) {
    ++singletons_;
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::set<std::size_t> IncrementalRref::solved_variables() const {
  std::set<std::size_t> out;
  for (const auto& row : rows_) {
    if (row.size() == 1) {
      out.insert(row.front().first);
    }
  }
  return out;
}

SparseRow to_sparse(std::span<const Rational> dense) {
  SparseRow out;
  for (std::size_t c = 0; c < dense.size(); ++c) {
    if (dense[c] != 0) {
      out.emplace_back(c, dense[c]);
    }
  }
  return out;
}

}  // namespace recon
