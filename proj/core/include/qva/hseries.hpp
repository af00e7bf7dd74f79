#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "qva/rational.hpp"

namespace qva {

/// Truncated power series sum_{i<N} c_i h^i with exact rational coefficients.
///
/// The same type doubles as a series in the nested variable x = h/u (see
/// g_series()); the composition helpers below act on it in that reading.
class HSeries {
public:
  explicit HSeries(std::size_t order);
  HSeries(std::size_t order, std::initializer_list<Rat> leading);

  static HSeries one(std::size_t order) { return monomial(order, 0, 1); }
  static HSeries monomial(std::size_t order, std::size_t power, const Rat &coeff);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Rat &operator[](std::size_t i) const { return coeffs_[i]; }
  Rat &operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rat> &coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Lowest power with a nonzero coefficient, or order() for the zero series.
  std::size_t valuation() const;

  HSeries &operator+=(const HSeries &rhs);
  HSeries &operator-=(const HSeries &rhs);
  HSeries &operator*=(const Rat &s);

  /// Truncated Cauchy product. Throws std::invalid_argument on mismatched orders.
  friend HSeries operator*(const HSeries &a, const HSeries &b);
  friend HSeries operator+(HSeries a, const HSeries &b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries &b) { return a -= b; }
  friend HSeries operator*(HSeries a, const Rat &s) { return a *= s; }
  friend HSeries operator*(const Rat &s, HSeries a) { return a *= s; }
  HSeries operator-() const;

  friend bool operator==(const HSeries &a, const HSeries &b) = default;

  /// Same coefficients reinterpreted at another truncation order.
  HSeries truncated(std::size_t order) const;

private:
  std::vector<Rat> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const HSeries &s);

/// Multiplicative inverse; requires an invertible constant term.
HSeries reciprocal(const HSeries &f);

/// F(x) -> F(-x). In the x = h/w reading this is the argument flip w -> -w.
HSeries negate_argument(const HSeries &f);

/// F(x) -> F(x / (1 + a x)). In the x = h/w reading this is the shift
/// w -> w + a h, since h/(w + a h) = x (1 + a x)^{-1}.
HSeries compose_shift(const HSeries &f, const Rat &a);

} // namespace qva

namespace qva {

/// F(h/w) -> F(h/(sign*w + shift*h)) in the x = h/w reading; sign is +1 or -1.
HSeries transform_argument(const HSeries &f, int sign, const Rat &shift);

} // namespace qva
