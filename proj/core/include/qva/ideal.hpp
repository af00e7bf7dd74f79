#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qva/pbw.hpp"
#include "qva/rational.hpp"

namespace qva {

/// The ideal generated by R^t(p) = x^t_(k+1)(-p), p >= k+1, at level k,
/// computed below PBW degree `degree_cap` and modulo h^h_order.
struct IdealSpec {
  int level = 1;
  Rat t = 0;
  int degree_cap = 0;
  std::size_t h_order = 1;
};

/// Spanning vectors b R^t(p) 1 of weight d, where weight = PBW degree - h-power
/// (each vector is homogeneous for it). Vectors carry degree cap d + h_order - 1,
/// which keeps all of their h-parts.
struct GradedSpan {
  int degree = 0;
  std::vector<WElement> vectors;
  /// The generator index p and the PBW monomial b of each vector.
  std::vector<int> generator;
  std::vector<PBWMonomial> multiplier;
  /// Rank of the h = 0 parts (which live in PBW degree d).
  std::size_t classical_rank = 0;
};

GradedSpan ideal_graded_span(const IdealSpec &spec, int d);

/// Rank of the h = 0 slice of the t = 0 span in degree d.
std::size_t classical_ideal_rank(int level, int d);

/// p(d) minus classical_ideal_rank(level, d). The h-order does not enter at
/// t = 0, where the generators carry no h.
std::size_t quotient_graded_dim(int level, int d);

struct MembershipReport {
  bool member = false;
  /// Smallest n with h^n w in the ideal modulo h^{N+n} (when member).
  std::size_t h_shift = 0;
};

/// Decides membership of w (known modulo h^N, N = spec.h_order) in the
/// h-adic closure of the ideal: w is accepted when h^n w lies in the ideal
/// modulo h^{N+n} for some n <= max_shift. Each weight component is solved
/// exactly over Q. Throws std::out_of_range when w has PBW degree above the
/// cap or its h-order differs from the spec.
MembershipReport membership_test(const WElement &w, const IdealSpec &spec,
                                 std::size_t max_shift = 0);

struct FactorizationReport {
  bool multiset_equal = false;
  bool series_equal = false;
  bool passed() const { return multiset_equal && series_equal; }
};

/// x^{+,t}_(k+l+1)(z) = x^{+,t}_(l)(z + (k+1)th) x^{+,t}_(k+1)(z) on the vacuum.
FactorizationReport factorization_check(int k, int l, const Rat &t);

struct GeneratorReport {
  bool passed = false;
  bool no_negative_powers = false;
  /// p for which the z^{p-k-1} coefficient differs from R^0(p) 1.
  std::vector<int> mismatches;
};

/// Checks that the z^{p-k-1} coefficient of Y(x(-1)^{k+1} 1, z) 1 is R^0(p) 1
/// for p = k+1..max_degree, with no negative powers of z.
GeneratorReport principal_generator_closure(int k, int max_degree, std::size_t h_order);

struct DegreeTwoReport {
  /// h^0, h^1, h^2 coefficients of x^{+,t}_(2)(z) 1 against x^+(z)^2,
  /// (t/2) d/dz x^+(z)^2 and (t^2/2) x^+(z) d^2/dz^2 x^+(z), on the vacuum.
  bool order0 = false;
  bool order1 = false;
  bool order2 = false;
  bool passed() const { return order0 && order1 && order2; }
};

DegreeTwoReport tneq0_degree2_expansion(const Rat &t, int window = 6);

} // namespace qva
