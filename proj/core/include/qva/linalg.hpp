#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qva/rational.hpp"

namespace qva {

/// Sparse integer row, sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, Int>>;
/// Sparse rational row, any order, zeros allowed.
using RatRow = std::vector<std::pair<std::size_t, Rat>>;

/// Incremental row echelon form over the integers (fraction-free elimination
/// with content removal). Rank and span membership are exact over Q.
class SparseEchelon {
public:
  explicit SparseEchelon(std::size_t columns) : columns_(columns) {}

  /// Adds a row; returns true when it is independent of the rows so far.
  bool insert(const RatRow &row);
  /// Whether the row lies in the span of the inserted rows.
  bool contains(const RatRow &row) const;

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t columns() const noexcept { return columns_; }

private:
  SparseRow to_integer(const RatRow &row) const;
  SparseRow reduce(SparseRow row) const;

  std::size_t columns_;
  std::map<std::size_t, SparseRow> pivots_;
};

std::size_t exact_rank(const std::vector<RatRow> &rows, std::size_t columns);

/// Solves the square system a x = b exactly. Throws std::domain_error when a
/// is singular and std::invalid_argument on shape mismatch.
std::vector<Rat> solve_dense(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

} // namespace qva
