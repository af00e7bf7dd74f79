#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qva/hseries.hpp"
#include "qva/rational.hpp"

namespace qva {

using Exponents = std::vector<int>;

/// A formal variable together with the closed exponent window [lo, hi] that
/// every stored term must respect. Windows always contain 0.
struct Variable {
  std::string name;
  int lo;
  int hi;
  friend bool operator==(const Variable &, const Variable &) = default;
};

/// Ordered variable list shared by ExpandedScalar / ExpandedVector values.
/// The formal parameter h is an ordinary coordinate named "h" with window
/// [0, N-1], which is how h-adic truncation is enforced.
class VarSpace {
public:
  VarSpace() = default;
  explicit VarSpace(std::vector<Variable> vars);

  /// Appends h with window [0, h_order - 1].
  static VarSpace with_h(std::vector<Variable> vars, std::size_t h_order);

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable &operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable> &vars() const noexcept { return vars_; }

  /// Index of a variable by name; throws std::out_of_range.
  std::size_t index(const std::string &name) const;
  bool has(const std::string &name) const;
  /// h-truncation order (hi + 1 of "h"), or 0 when h is absent.
  std::size_t h_order() const;

  bool admits(const Exponents &e) const;

  friend bool operator==(const VarSpace &, const VarSpace &) = default;

private:
  std::vector<Variable> vars_;
};

/// A linear form sum_i coeff_i * var_i (variable indices into a VarSpace).
using LinearForm = std::vector<std::pair<std::size_t, Rat>>;

/// Multivariable Laurent-type series with rational coefficients, truncated to
/// the windows of its VarSpace. Terms falling outside the windows are dropped
/// silently; operations on values with different spaces are rejected.
class ExpandedScalar {
public:
  explicit ExpandedScalar(VarSpace space);

  static ExpandedScalar constant(const VarSpace &space, const Rat &c);
  static ExpandedScalar monomial(const VarSpace &space, const Exponents &e, const Rat &c);
  /// The linear polynomial sum coeff_i var_i + c0.
  static ExpandedScalar linear(const VarSpace &space, const LinearForm &form, const Rat &c0 = 0);

  const VarSpace &space() const noexcept { return space_; }
  const std::map<Exponents, Rat> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rat coefficient(const Exponents &e) const;
  /// Adds c to the coefficient of e (dropped when outside the windows).
  void add_term(const Exponents &e, const Rat &c);

  ExpandedScalar &operator+=(const ExpandedScalar &rhs);
  ExpandedScalar &operator-=(const ExpandedScalar &rhs);
  ExpandedScalar &operator*=(const Rat &s);
  friend ExpandedScalar operator+(ExpandedScalar a, const ExpandedScalar &b) { return a += b; }
  friend ExpandedScalar operator-(ExpandedScalar a, const ExpandedScalar &b) { return a -= b; }
  friend ExpandedScalar operator*(ExpandedScalar a, const Rat &s) { return a *= s; }
  friend ExpandedScalar operator*(const ExpandedScalar &a, const ExpandedScalar &b);
  ExpandedScalar operator-() const;

  /// Exact equality; throws std::invalid_argument when the spaces differ.
  friend bool operator==(const ExpandedScalar &a, const ExpandedScalar &b);

  /// Nonnegative integer power, truncated at every step.
  ExpandedScalar pow(unsigned e) const;

  /// Terms with exponent `power` in variable `var`, that exponent reset to 0.
  ExpandedScalar slice(std::size_t var, int power) const;

  /// The same terms in a space with identical variables but other windows.
  ExpandedScalar recast(const VarSpace &space) const;

private:
  VarSpace space_;
  std::map<Exponents, Rat> terms_;
};

std::ostream &operator<<(std::ostream &os, const ExpandedScalar &s);

/// (left + rest)^{-r} = sum_{l>=0} C(-r, l) left^{-r-l} rest^l, expanded in
/// negative powers of the left variable. For r <= 0 this is the ordinary
/// binomial polynomial. The window of `left` bounds l.
ExpandedScalar expand_neg_power(const VarSpace &space, std::size_t left, const LinearForm &rest,
                                int r);

/// Two-variable convenience form: (x_left + x_right)^{-r}.
ExpandedScalar expand_neg_power(const VarSpace &space, std::size_t left, std::size_t right, int r);

/// F(h / (sign*left + rest)) for F a series in x = h/w given as HSeries:
/// sum_b F_b h^b (sign*left + rest)^{-b}. Requires the space to contain "h".
/// sign must be +1 or -1; the left variable still carries the negative
/// powers, (-left + rest)^{-b} = (-1)^b (left - rest)^{-b}.
ExpandedScalar substitute_inverse_series(const VarSpace &space, const HSeries &f, std::size_t left,
                                         int sign, const LinearForm &rest);

} // namespace qva
