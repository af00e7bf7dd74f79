#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qva/rational.hpp"
#include "qva/series_vector.hpp"

namespace qva {

/// Multiset of shifts s in factors x^+(z + s h). A product of commuting x^+
/// factors depends only on this multiset.
class ShiftMultiset {
public:
  ShiftMultiset() = default;
  explicit ShiftMultiset(std::vector<Rat> shifts);
  /// Shifts of x^{+,t}_(m)(z + shift h): shift, shift + t, ..., shift + (m-1)t.
  static ShiftMultiset quasi_particle(int m, const Rat &t, const Rat &shift);

  const std::vector<Rat> &shifts() const noexcept { return shifts_; }
  std::size_t size() const noexcept { return shifts_.size(); }
  ShiftMultiset operator+(const ShiftMultiset &rhs) const;
  friend bool operator==(const ShiftMultiset &, const ShiftMultiset &) = default;
  std::string to_string() const;

private:
  std::vector<Rat> shifts_; // sorted
};

/// (c_1, ..., c_2p) = (0, t, ..., (p-1)t; (q+1)t, ..., (q+p)t).
std::vector<Rat> relation_nodes(int p, int q, const Rat &t);

/// One factor x^{+,t}_(charge)(z + shift h); charge 0 is the empty factor 1.
struct QPFactor {
  int charge;
  Rat shift;
};

/// Both sides of exchange identity number `index` in 1..2p: indices 1..p are
/// x_(p)(z+c_k h) x_(q)(z+pth) = x_(k-1)(z+pth) x_(p+q-k+1)(z+c_k h), indices
/// p+1..2p (k = index - p) are
/// x_(p)(z+c_{p+k} h) x_(q)(z+pth) = x_(p-k)(z+c_{p+k} h) x_(q+k)(z+pth).
struct ExchangeIdentity {
  std::vector<QPFactor> lhs;
  std::vector<QPFactor> rhs;
};

/// Throws std::out_of_range unless q >= p >= 1 and 1 <= index <= 2p.
ExchangeIdentity exchange_identity(int p, int q, int index, const Rat &t);

ShiftMultiset shifts_of(const std::vector<QPFactor> &factors, const Rat &t);

/// Product of the factors applied to the vacuum, in a space {z, h}.
ExpandedVector factor_product(const std::vector<QPFactor> &factors, const Rat &t,
                              const VarSpace &space, int degree_cap);

enum class ExchangeFamily { first, second };

struct ExchangeReport {
  bool multiset_equal = false;
  /// Both sides agree as truncated series (z^0..z^window, h-order 3).
  bool series_equal = false;
  /// Some side contains the empty factor x_(0) = 1.
  bool degenerate = false;
  std::string lhs_shifts;
  std::string rhs_shifts;
  bool passed() const { return multiset_equal && series_equal; }
};

/// Family `first` is indices k = 1..p, family `second` indices p+k.
/// Throws std::out_of_range unless q >= p >= 1 and 1 <= k <= p.
ExchangeReport exchange_identity_check(int p, int q, int k, ExchangeFamily family, const Rat &t,
                                       int window = 2);

struct AlphaSolution {
  int p, q, l;
  Rat t;
  std::vector<Rat> alpha;
};

/// Solves sum_i c_i^k alpha_i = delta_{k,l-1} (l-1)! for k = 0..l-1 with
/// 0^0 = 1. Throws std::out_of_range for invalid (p, q, l) and
/// std::domain_error when the system is singular (t = 0 and l >= 2).
AlphaSolution solve_alpha(int p, int q, int l, const Rat &t);

/// Left minus right side of every equation of the system.
std::vector<Rat> alpha_residuals(const AlphaSolution &s);

/// sum_k alpha_k x_(p)(z+c_k h) x_(q)(z+pth) 1 in {z in [0, window], h}.
ExpandedVector combined_relation_lhs(const AlphaSolution &s, std::size_t h_order, int window);
/// sum_k alpha_k (right side of exchange identity k) 1, same space.
ExpandedVector combined_relation_rhs(const AlphaSolution &s, std::size_t h_order, int window);

struct ValuationReport {
  /// Lowest h-power present on the window (h_order when everything vanishes).
  std::size_t valuation = 0;
  /// False when the whole window vanishes modulo h^h_order.
  bool conclusive = false;
  bool passed = false;
};

/// Valuation of the combined left side on z^0..z^window; passes when it is at
/// least l-1 and the result is conclusive. h_order must exceed l-1.
ValuationReport valuation_check(const AlphaSolution &s, std::size_t h_order, int window);

struct DerivativeReport {
  bool passed = false;
  std::string witness;
};

/// h^{1-l} sum_k alpha_k x_(p)(z+c_k h) x_(q)(z+pth) 1 agrees modulo h with
/// (d/dz)^{l-1} x_(p)(z) . x_(q)(z) 1 on z^0..z^window.
DerivativeReport derivative_relation_check(const AlphaSolution &s, int window);

} // namespace qva
