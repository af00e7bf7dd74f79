#pragma once

#include <array>
#include <cstddef>

#include "qva/expanded.hpp"

namespace qva {

/// Operator on C^2 (x) C^2 with ExpandedScalar entries. Rows and columns are
/// indexed by basis pairs (i, j) -> 2*i + j with i, j in {0, 1}; entry
/// [(a,b),(c,d)] is the coefficient of e_ac (x) e_bd.
class MatrixOperator {
public:
  explicit MatrixOperator(const VarSpace &space);

  static MatrixOperator identity(const VarSpace &space);
  static MatrixOperator permutation(const VarSpace &space);

  const VarSpace &space() const noexcept { return space_; }
  const ExpandedScalar &at(std::size_t row, std::size_t col) const { return entries_[row * 4 + col]; }
  ExpandedScalar &at(std::size_t row, std::size_t col) { return entries_[row * 4 + col]; }

  static constexpr std::size_t index(std::size_t i, std::size_t j) { return 2 * i + j; }

  MatrixOperator &operator+=(const MatrixOperator &rhs);
  MatrixOperator &operator-=(const MatrixOperator &rhs);
  friend MatrixOperator operator+(MatrixOperator a, const MatrixOperator &b) { return a += b; }
  friend MatrixOperator operator-(MatrixOperator a, const MatrixOperator &b) { return a -= b; }
  /// Entrywise scaling by a scalar series.
  friend MatrixOperator operator*(const ExpandedScalar &s, const MatrixOperator &m);
  /// Ordinary operator composition.
  friend MatrixOperator operator*(const MatrixOperator &a, const MatrixOperator &b);
  friend bool operator==(const MatrixOperator &a, const MatrixOperator &b);

  bool is_zero() const;
  /// Entrywise slice at a fixed h-power (h must be in the space).
  MatrixOperator h_slice(int power) const;

private:
  VarSpace space_;
  std::array<ExpandedScalar, 16> entries_;
};

/// A = sum a' (x) a'', B = sum b' (x) b''  ->  sum (b' a') (x) (a'' b'').
MatrixOperator rl_product(const MatrixOperator &a, const MatrixOperator &b);
/// A = sum a' (x) a'', B = sum b' (x) b''  ->  sum (a' b') (x) (b'' a'').
MatrixOperator lr_product(const MatrixOperator &a, const MatrixOperator &b);

/// Argument sign*u + shift*h of an R-matrix.
struct Argument {
  int sign = 1;
  Rat shift = 0;
};

/// Yang R-matrix 1 - h P (sign*u + shift*h)^{-1}, expanded in negative powers of u.
MatrixOperator yang_r(const VarSpace &space, std::size_t u, const Argument &arg = {});

/// Normalised R-matrix g(w) R(w) at w = sign*u + shift*h.
MatrixOperator rbar(const VarSpace &space, std::size_t u, const Argument &arg = {});

/// Space (u, h) with u in [-(order-1), 0] and h in [0, order-1]; every entry of
/// the operators above is a series in h/u, so these windows lose nothing.
VarSpace rmatrix_space(std::size_t h_order);

} // namespace qva
