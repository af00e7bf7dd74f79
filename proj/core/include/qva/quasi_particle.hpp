#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qva/hseries.hpp"
#include "qva/pbw.hpp"
#include "qva/series_vector.hpp"

namespace qva {

/// x_(m)(n): charge m >= 1, energy n <= -1.
struct QuasiParticle {
  int charge;
  int energy;
  friend bool operator==(const QuasiParticle &, const QuasiParticle &) = default;
  friend auto operator<=>(const QuasiParticle &, const QuasiParticle &) = default;
};

/// Quasi-particle monomial x_(m_r)(n_r) ... x_(m_1)(n_1) with m_1 >= ... >= m_r.
/// particles()[s-1] is (m_s, n_s), so the first stored particle is the
/// rightmost (largest charge) one.
class QPMonomial {
public:
  QPMonomial() = default;
  /// From pairs (m, n) in written order: (m_r, n_r), ..., (m_1, n_1).
  /// Throws std::invalid_argument unless charges are >= 1 and non-increasing
  /// towards the right end and energies are <= -1.
  explicit QPMonomial(const std::vector<std::pair<int, int>> &written);
  static QPMonomial from_particles(std::vector<QuasiParticle> particles);

  const std::vector<QuasiParticle> &particles() const noexcept { return particles_; }
  std::vector<std::pair<int, int>> written() const;
  std::size_t size() const noexcept { return particles_.size(); }
  bool is_vacuum() const noexcept { return particles_.empty(); }
  int degree() const noexcept { return degree_; }
  int max_charge() const noexcept { return particles_.empty() ? 0 : particles_.front().charge; }
  int total_charge() const;

  friend bool operator==(const QPMonomial &, const QPMonomial &) = default;

  /// "x_(1)(-3)x_(1)(-1)", or "1" for the vacuum monomial.
  std::string to_string() const;

private:
  std::vector<QuasiParticle> particles_;
  int degree_ = 0;
};

std::ostream &operator<<(std::ostream &os, const QPMonomial &q);

/// Enumeration order: degree, number of quasi-particles, charges, energies.
bool enumeration_less(const QPMonomial &a, const QPMonomial &b);

/// Difference conditions: for s = 1..r-1, m_{s+1} = m_s forces
/// n_{s+1} <= n_s - 2 m_s; for every s = 1..r, n_s <= -m_s - 2(s-1) m_s;
/// with a charge cap k every charge is <= k.
bool is_basis_monomial(const QPMonomial &q, std::optional<int> max_charge = std::nullopt);

/// Basis monomials of degree exactly `degree`, in enumeration order. The
/// conditions do not involve t, so neither does the result.
std::vector<QPMonomial> enumerate_qp_basis(int degree, std::optional<int> max_charge = std::nullopt);
/// Basis monomials of every degree 0..max_degree, in enumeration order.
std::vector<QPMonomial> enumerate_qp_basis_upto(int max_degree,
                                                std::optional<int> max_charge = std::nullopt);

/// prod_j x^+(z + s_j h) 1 for the given shifts s_j, in a space containing the
/// variable z and h. Each factor is a polynomial in z and h, so only the
/// windows and the degree cap truncate.
ExpandedVector shifted_product(const VarSpace &space, int degree_cap, std::size_t z,
                               const std::vector<Rat> &shifts);

/// x^{+,t}_(m)(z + shift h) 1 = prod_{j<m} x^+(z + (shift + j t) h) 1.
ExpandedVector quasi_particle_series(const VarSpace &space, int degree_cap, std::size_t z, int m,
                                     const Rat &t, const Rat &shift = 0);

/// Caches the coefficients x^t_(m)(-r) of x^{+,t}_(m)(u) = sum_{r>=m} x^t_(m)(-r) u^{r-m}
/// as elements of W (degree cap D, h-order N). The h^b part of x^t_(m)(-r)
/// lives in PBW degree r + b, so parts above the cap are dropped.
/// Not safe for concurrent use.
class QPFactory {
public:
  QPFactory(Rat t, std::size_t h_order, int degree_cap);

  const Rat &t() const noexcept { return t_; }
  std::size_t h_order() const noexcept { return h_order_; }
  int degree_cap() const noexcept { return degree_cap_; }

  /// Throws std::invalid_argument("undefined coefficient") when r < m and
  /// std::out_of_range when r exceeds the degree cap.
  const WElement &coefficient(int m, int r);
  /// Product of the coefficients of the quasi-particles applied to the vacuum.
  /// Throws std::out_of_range when degree(q) exceeds the cap.
  WElement to_w(const QPMonomial &q);

private:
  Rat t_;
  std::size_t h_order_;
  int degree_cap_;
  std::map<int, std::vector<WElement>> series_;
};

WElement qp_series_coefficient(int m, const Rat &t, int r, std::size_t h_order, int degree_cap);
WElement qp_monomial_to_w(const QPMonomial &q, const Rat &t, std::size_t h_order, int degree_cap);

/// Coordinates of the basis monomials of degree <= D in the PBW basis.
struct TransitionMatrix {
  std::vector<PBWMonomial> rows;
  std::vector<QPMonomial> columns;
  /// entries[i][j]: coefficient of rows[i] in columns[j].
  std::vector<std::vector<HSeries>> entries;
  /// For each degree d = 0..D: whether the square h = 0 block is invertible.
  std::vector<bool> block_invertible;

  bool all_blocks_invertible() const;
};

TransitionMatrix transition_matrix(int max_degree, const Rat &t, std::size_t h_order);

/// Whether the h = 0 block of degree d (basis monomials against PBW monomials)
/// is invertible, using exact rank.
bool classical_block_invertible(int degree, const Rat &t);

} // namespace qva
