#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qva/hseries.hpp"

namespace qva {

/// Ordered product x(r_m) ... x(r_1) of negative modes r_m <= ... <= r_1 <= -1.
/// Stored as the positive parts |r_m| >= ... >= |r_1|, i.e. a partition of the degree.
class PBWMonomial {
public:
  PBWMonomial() = default;
  /// From positive parts in any order.
  explicit PBWMonomial(std::vector<int> parts);
  /// From negative modes (each <= -1) in any order.
  static PBWMonomial from_modes(const std::vector<int> &modes);

  const std::vector<int> &parts() const noexcept { return parts_; }
  std::vector<int> modes() const;
  std::size_t length() const noexcept { return parts_.size(); }
  int degree() const noexcept { return degree_; }
  bool is_vacuum() const noexcept { return parts_.empty(); }

  friend PBWMonomial operator*(const PBWMonomial &a, const PBWMonomial &b);
  friend bool operator==(const PBWMonomial &, const PBWMonomial &) = default;
  friend auto operator<=>(const PBWMonomial &a, const PBWMonomial &b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const;

private:
  std::vector<int> parts_;
  int degree_ = 0;
};

std::ostream &operator<<(std::ostream &os, const PBWMonomial &m);

/// All PBW monomials of the given degree (partitions), in increasing order.
std::vector<PBWMonomial> pbw_monomials(int degree);

/// Finite combination of PBW monomials applied to the vacuum, with HSeries
/// coefficients. Keys never exceed the degree cap; zero coefficients are pruned.
/// The algebra generated by the x(-r) is commutative, so products merge parts.
class WElement {
public:
  WElement(int degree_cap, std::size_t h_order);

  static WElement vacuum(int degree_cap, std::size_t h_order);
  static WElement generator(int r, int degree_cap, std::size_t h_order);
  static WElement monomial(const PBWMonomial &m, const HSeries &coeff, int degree_cap);

  int degree_cap() const noexcept { return degree_cap_; }
  std::size_t h_order() const noexcept { return h_order_; }
  const std::map<PBWMonomial, HSeries> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  HSeries coefficient(const PBWMonomial &m) const;
  /// Adds c to the coefficient of m. Throws std::out_of_range when m exceeds the
  /// degree cap and c is nonzero.
  void add(const PBWMonomial &m, const HSeries &c);
  /// Like add(), but silently drops monomials above the degree cap.
  void add_truncating(const PBWMonomial &m, const HSeries &c);
  void add_scalar(const PBWMonomial &m, std::size_t h_power, const Rat &c);

  WElement &operator+=(const WElement &rhs);
  WElement &operator-=(const WElement &rhs);
  WElement &operator*=(const Rat &s);
  WElement &operator*=(const HSeries &s);
  friend WElement operator+(WElement a, const WElement &b) { return a += b; }
  friend WElement operator-(WElement a, const WElement &b) { return a -= b; }
  friend WElement operator*(WElement a, const Rat &s) { return a *= s; }
  friend WElement operator*(const Rat &s, WElement a) { return a *= s; }
  /// Algebra product truncated at the degree cap.
  friend WElement operator*(const WElement &a, const WElement &b);
  /// Equality; throws std::invalid_argument when caps differ.
  friend bool operator==(const WElement &a, const WElement &b);

  /// Coefficient of h^power as an h-free element (order 1).
  WElement h_coefficient(std::size_t power) const;
  /// Part of PBW degree exactly d.
  WElement degree_part(int d) const;

  std::string to_string() const;

private:
  int degree_cap_;
  std::size_t h_order_;
  std::map<PBWMonomial, HSeries> terms_;
};

std::ostream &operator<<(std::ostream &os, const WElement &w);

/// Drops every positive power of h (result has h-order 1).
WElement classical_limit(const WElement &w);

} // namespace qva
