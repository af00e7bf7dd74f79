#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qva/expanded.hpp"
#include "qva/hseries.hpp"
#include "qva/series_vector.hpp"

namespace qva {

// Every factor of the vertex operator and braiding formulas depends on a pair
// (u_i, v_j) only through w = z + u_i - v_j, and is a power series in x = h/w.
// The functions below return these per-pair series in x.

/// (1 + x) G(-x) G(x / (1 + (c+2) x)): the factor of Y for one pair, i.e.
/// (1 - h/(-w)) g(-w) g(w + (c+2) h).
HSeries y_pair_factor(const Rat &c, std::size_t order);

/// (1 - x)^2 G(x)^2 G(-x / (1 + c x)) G(-x / (1 - (c+2) x)): the braiding
/// factor (1 - h/w)^2 g(w)^2 g(-w - c h) g(-w + (c+2) h).
HSeries s_pair_factor(const Rat &c, std::size_t order);

/// (1 - x) G(x) G(-x / (1 + c x)): the factor g(w) g(-w - c h) (1 - h/w)
/// multiplying a product of two copies of Y(x(-1)1, z) in the locality relation.
HSeries locality_factor(const Rat &c, std::size_t order);

/// Truncation data for Y(x^+_[n](u)1, z) x^+_[m](v)1: n = u_hi.size(),
/// m = v_hi.size(), exponent windows [0, u_hi[i]] and [0, v_hi[j]]. The z
/// window is derived: [-(h_order - 1) - sum u_hi - sum v_hi, degree_cap],
/// which keeps every term whose u, v and h exponents fit their windows.
struct VertexCaps {
  std::size_t h_order = 1;
  int degree_cap = 0;
  std::vector<int> u_hi;
  std::vector<int> v_hi;
  std::string z_name = "z";
};

/// Variables z, u1..un, v1..vm, h.
VarSpace vertex_space(const VertexCaps &caps);

/// Product over pairs of y_pair_factor(h / (z + u_i - v_j)), negative powers on z.
ExpandedScalar y_prefactor(const Rat &c, const VertexCaps &caps);
/// Product over pairs of s_pair_factor(h / (z + u_i - v_j)).
ExpandedScalar s_prefactor(const Rat &c, const VertexCaps &caps);

/// Y(x^+_[n](u)1, z) x^+_[m](v)1 = prefactor * x^+(z+u_1)...x^+(z+u_n) x^+(v_1)...x^+(v_m) 1.
struct VertexResult {
  ExpandedScalar prefactor;
  ExpandedVector value;

  /// Coefficient of u^a v^b as a series in z and h (space {z, h}).
  /// Throws std::out_of_range for powers outside the caps.
  ExpandedVector coefficient(const std::vector<int> &u_powers, const std::vector<int> &v_powers) const;
};

VertexResult y_apply(const Rat &c, const VertexCaps &caps);

/// Y(x(-1)1, z) applied to a vector, term by term in PBW coordinates: the PBW
/// monomial x(-r_1)...x(-r_m)1 is the coefficient of prod v_j^{r_j - 1} in
/// x^+_[m](v)1. The variable z_name must be present in `target` and absent
/// from the input; `target` must contain the input's variables.
ExpandedVector apply_generator_vertex(const Rat &c, const ExpandedVector &in,
                                      const std::string &z_name, const VarSpace &target);

struct LocalityReport {
  Rat c;
  std::size_t h_order = 0;
  int window = 0;
  int nloc_max = 0;
  /// Smallest N with (z1-z2)^N (LHS - RHS) = 0 on the window for every tested
  /// vector, or -1 when none up to nloc_max works.
  int n_loc = -1;
  /// First nonzero coefficient of the difference for the largest N tried, if any.
  std::string witness;
  bool passed() const { return n_loc >= 0; }
};

/// Compares g(z1-z2) g(-z1+z2-hc)(1 - h/(z1-z2)) Y(x(-1)1,z1) Y(x(-1)1,z2) v with
/// the same expression under z1 <-> z2, for v = 1 and v = x(-1)1, modulo
/// h^h_order, on the coefficients of z1^a z2^b with |a|, |b| <= window. The left
/// side is expanded in negative powers of z1, the right side in negative powers
/// of z2.
LocalityReport check_s_locality(const Rat &c, std::size_t h_order, int window, int nloc_max);

struct RelationReport {
  bool passed = false;
  std::string witness;
};

/// At c = -2: (z1 - z2 - h) Y(z1) Y(z2) 1 = (z1 - z2 + h) Y(z2) Y(z1) 1 modulo h^h_order
/// on the window, with Y(z) = Y(x(-1)1, z).
RelationReport check_critical_relation(std::size_t h_order, int window);

/// Coefficient of z^{-j} in Y(x(-1)1, z) x(-1)1 modulo h^h_order.
struct PoleTerm {
  int j;
  bool nonzero;
  /// Lowest h-power present (h_order when the coefficient vanishes).
  std::size_t h_valuation;
  WElement coefficient;
};

std::vector<PoleTerm> pole_witness(const Rat &c, std::size_t h_order, int max_j);

} // namespace qva
