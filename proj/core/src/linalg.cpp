#include "qva/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qva {

namespace {

void make_primitive(SparseRow &row) {
  if (row.empty())
    return;
  Int g = 0;
  for (const auto &[c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1)
      break;
  }
  if (row.front().second < 0)
    g = -g;
  if (g != 1)
    for (auto &[c, v] : row)
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a * row - b * pivot, both sorted; the leading entries cancel.
SparseRow combine(const SparseRow &row, const Int &a, const SparseRow &pivot, const Int &b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  Int v;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      v = a * row[i].second - b * pivot[j].second;
      if (v != 0)
        out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

SparseRow SparseEchelon::to_integer(const RatRow &row) const {
  std::map<std::size_t, Rat> merged;
  for (const auto &[c, v] : row) {
    if (c >= columns_)
      throw std::out_of_range("SparseEchelon: column index out of range");
    merged[c] += v;
  }
  Int lcm = 1;
  for (const auto &[c, v] : merged)
    if (v != 0)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  SparseRow out;
  for (const auto &[c, v] : merged)
    if (v != 0) {
      Rat scaled = v * lcm;
      out.emplace_back(c, scaled.get_num());
    }
  make_primitive(out);
  return out;
}

SparseRow SparseEchelon::reduce(SparseRow row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end())
      break;
    const SparseRow &pivot = it->second;
    Int g;
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    const Int a = pivot.front().second / g;
    const Int b = row.front().second / g;
    row = combine(row, a, pivot, b);
    make_primitive(row);
  }
  return row;
}

bool SparseEchelon::insert(const RatRow &row) {
  SparseRow reduced = reduce(to_integer(row));
  if (reduced.empty())
    return false;
  const std::size_t lead = reduced.front().first;
  pivots_.emplace(lead, std::move(reduced));
  return true;
}

bool SparseEchelon::contains(const RatRow &row) const { return reduce(to_integer(row)).empty(); }

std::size_t exact_rank(const std::vector<RatRow> &rows, std::size_t columns) {
  SparseEchelon e(columns);
  for (const auto &r : rows) {
    e.insert(r);
    if (e.rank() == columns)
      break;
  }
  return e.rank();
}

std::vector<Rat> solve_dense(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  if (b.size() != n)
    throw std::invalid_argument("solve_dense: right-hand side has the wrong length");
  for (const auto &row : a)
    if (row.size() != n)
      throw std::invalid_argument("solve_dense: matrix is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw std::domain_error("solve_dense: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      const Rat f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k)
        a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    b[i] /= a[i][i];
  return b;
}

} // namespace qva
