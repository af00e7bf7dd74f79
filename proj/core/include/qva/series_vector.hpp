#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <vector>

#include "qva/expanded.hpp"
#include "qva/pbw.hpp"

namespace qva {

/// Series in the variables of a VarSpace whose coefficients are vectors of the
/// principal subspace (finite combinations of PBW monomials applied to the
/// vacuum). Terms outside the exponent windows or above the PBW degree cap are
/// dropped.
class ExpandedVector {
public:
  using Coeffs = std::map<PBWMonomial, Rat>;

  ExpandedVector(VarSpace space, int degree_cap);

  static ExpandedVector vacuum(const VarSpace &space, int degree_cap);
  /// x^+(w) 1 = sum_{r>=1} x(-r) w^{r-1} 1 for the linear form w; the powers
  /// of w are plain binomial polynomials.
  static ExpandedVector xplus(const VarSpace &space, int degree_cap, const LinearForm &argument);

  const VarSpace &space() const noexcept { return space_; }
  int degree_cap() const noexcept { return degree_cap_; }
  const std::map<Exponents, Coeffs> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const;

  void add_term(const Exponents &e, const PBWMonomial &m, const Rat &c);
  const Coeffs *coefficient(const Exponents &e) const;

  ExpandedVector &operator+=(const ExpandedVector &rhs);
  ExpandedVector &operator-=(const ExpandedVector &rhs);
  ExpandedVector &operator*=(const Rat &s);
  friend ExpandedVector operator+(ExpandedVector a, const ExpandedVector &b) { return a += b; }
  friend ExpandedVector operator-(ExpandedVector a, const ExpandedVector &b) { return a -= b; }
  friend ExpandedVector operator*(ExpandedVector a, const Rat &s) { return a *= s; }
  friend ExpandedVector operator*(const ExpandedScalar &s, const ExpandedVector &v);
  /// Product in the (commutative) algebra of the x(-r), series-wise.
  friend ExpandedVector operator*(const ExpandedVector &a, const ExpandedVector &b);
  /// Exact equality; throws std::invalid_argument on different spaces or caps.
  friend bool operator==(const ExpandedVector &a, const ExpandedVector &b);

  /// Formal derivative in one variable.
  ExpandedVector derivative(std::size_t var) const;
  /// Terms whose exponent in `var` equals `power`, with that exponent reset to 0.
  ExpandedVector slice(std::size_t var, int power) const;
  /// Lowest h-power present (space().h_order() when zero).
  std::size_t h_valuation() const;

  /// Coefficient at fixed exponents of every non-h variable, as an element of W.
  /// `exps` lists either every variable (the h entry is ignored) or every
  /// variable except h; throws std::invalid_argument otherwise.
  WElement at(const Exponents &exps) const;

  /// Moves the terms into `target`, matching variables by name. Variables of
  /// this space missing from `target` must carry exponent 0 (others are
  /// dropped); target variables missing here get exponent 0.
  ExpandedVector reembed(const VarSpace &target) const;

private:
  VarSpace space_;
  int degree_cap_;
  std::map<Exponents, Coeffs> terms_;
};

std::ostream &operator<<(std::ostream &os, const ExpandedVector &v);

/// s * v with the result truncated to the windows of `target`. The three
/// spaces must list the same variable names in the same order; only the
/// windows may differ.
ExpandedVector multiply_into(const ExpandedScalar &s, const ExpandedVector &v,
                             const VarSpace &target);

/// Scalar analogue of ExpandedVector::reembed().
ExpandedScalar reembed(const ExpandedScalar &s, const VarSpace &target);

} // namespace qva
