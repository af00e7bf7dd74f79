#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "qva/pbw.hpp"
#include "qva/quasi_particle.hpp"
#include "qva/series_vector.hpp"

using namespace qva;

namespace {

// p(d) from Euler's pentagonal number recurrence.
std::vector<long long> partition_numbers(int max_d) {
  std::vector<long long> p(static_cast<std::size_t>(max_d) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_d; ++n)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n)
        break;
      const long long sign = (k % 2) ? 1 : -1;
      p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n)
        p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g2)];
    }
  return p;
}

// Partitions of d whose part multiplicities satisfy f_j + f_{j+1} <= k.
long long gordon_count(int d, int k) {
  long long count = 0;
  std::vector<int> f(static_cast<std::size_t>(d) + 2, 0);
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      for (int j = 1; j <= d; ++j)
        if (f[static_cast<std::size_t>(j)] + f[static_cast<std::size_t>(j) + 1] > k)
          return;
      ++count;
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      ++f[static_cast<std::size_t>(part)];
      rec(remaining - part, part);
      --f[static_cast<std::size_t>(part)];
    }
  };
  rec(d, d);
  return count;
}

// Every quasi-particle monomial of degree d (charges non-increasing towards
// the right end, energies n <= -m, equal charges with non-increasing energies).
std::vector<QPMonomial> all_qp_monomials(int d) {
  std::vector<QPMonomial> out;
  std::vector<QuasiParticle> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(QPMonomial::from_particles(cur));
      return;
    }
    for (int m = 1; m <= remaining; ++m) {
      if (!cur.empty() && m > cur.back().charge)
        break;
      for (int e = m; e <= remaining; ++e) {
        if (!cur.empty() && m == cur.back().charge && -e > cur.back().energy)
          continue;
        cur.push_back({m, -e});
        rec(remaining - e);
        cur.pop_back();
      }
    }
  };
  rec(d);
  return out;
}

bool satisfies_difference_conditions(const QPMonomial &q) {
  const auto &ps = q.particles();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    int bound = -ps[i].charge;
    for (std::size_t j = 0; j < i; ++j)
      bound -= 2 * std::min(ps[i].charge, ps[j].charge);
    if (ps[i].energy > bound)
      return false;
    if (i + 1 < ps.size() && ps[i + 1].charge == ps[i].charge &&
        ps[i + 1].energy > ps[i].energy - 2 * ps[i].charge)
      return false;
  }
  return true;
}

std::vector<std::string> names(const std::vector<QPMonomial> &qs) {
  std::vector<std::string> out;
  for (const auto &q : qs)
    out.push_back(q.to_string());
  return out;
}

} // namespace

TEST(Pbw, MonomialsArePartitions) {
  const auto p = partition_numbers(20);
  for (int d = 0; d <= 20; ++d)
    EXPECT_EQ(static_cast<long long>(pbw_monomials(d).size()), p[static_cast<std::size_t>(d)]) << d;
  const auto four = pbw_monomials(4);
  EXPECT_EQ(four.front().parts(), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(PBWMonomial::from_modes({-1, -3}).parts(), (std::vector<int>{3, 1}));
  EXPECT_THROW(PBWMonomial::from_modes({0}), std::invalid_argument);
}

TEST(Pbw, ProductIsCommutativeAndMergesParts) {
  WElement a(6, 3), b(6, 3);
  a.add(PBWMonomial({2}), HSeries(3, {1, 2}));
  a.add(PBWMonomial({1, 1}), HSeries(3, {0, 0, 3}));
  b.add(PBWMonomial({3}), HSeries(3, {-1}));
  b.add(PBWMonomial({5}), HSeries(3, {1}));
  EXPECT_EQ(a * b, b * a);
  const WElement ab = a * b;
  EXPECT_EQ(ab.coefficient(PBWMonomial({3, 2})), HSeries(3, {-1, -2}));
  // Degree 7 products are above the cap.
  EXPECT_EQ(ab.coefficient(PBWMonomial({5, 2})), HSeries(3));
}

TEST(Pbw, CapsAndTruncation) {
  WElement w(3, 2);
  EXPECT_THROW(w.add(PBWMonomial({4}), HSeries(2, {1})), std::out_of_range);
  w.add_truncating(PBWMonomial({4}), HSeries(2, {1}));
  EXPECT_TRUE(w.is_zero());
  w.add_scalar(PBWMonomial({2, 1}), 1, 5);
  EXPECT_EQ(w.h_coefficient(1).coefficient(PBWMonomial({2, 1})), HSeries(1, {5}));
  EXPECT_TRUE(classical_limit(w).is_zero());
  EXPECT_THROW((void)(WElement(3, 2) == WElement(4, 2)), std::invalid_argument);
}

TEST(QuasiParticles, ConstructionValidatesOrder) {
  const QPMonomial q({{1, -3}, {2, -2}});
  EXPECT_EQ(q.particles().front(), (QuasiParticle{2, -2}));
  EXPECT_EQ(q.degree(), 5);
  EXPECT_EQ(q.total_charge(), 3);
  EXPECT_EQ(q.max_charge(), 2);
  EXPECT_EQ(q.to_string(), "x_(1)(-3)x_(2)(-2)");
  EXPECT_EQ(QPMonomial().to_string(), "1");
  EXPECT_THROW(QPMonomial({{2, -4}, {1, -1}}), std::invalid_argument);
  EXPECT_THROW(QPMonomial({{0, -1}}), std::invalid_argument);
  EXPECT_THROW(QPMonomial({{1, 0}}), std::invalid_argument);
}

TEST(QuasiParticles, DegreeFourListing) {
  EXPECT_EQ(names(enumerate_qp_basis(4)),
            (std::vector<std::string>{"x_(1)(-4)", "x_(2)(-4)", "x_(3)(-4)", "x_(4)(-4)",
                                      "x_(1)(-3)x_(1)(-1)"}));
  EXPECT_EQ(names(enumerate_qp_basis(4, 1)),
            (std::vector<std::string>{"x_(1)(-4)", "x_(1)(-3)x_(1)(-1)"}));
  EXPECT_EQ(names(enumerate_qp_basis(0)), (std::vector<std::string>{"1"}));
}

TEST(QuasiParticles, BasisCountsArePartitionNumbers) {
  const auto p = partition_numbers(20);
  for (int d = 0; d <= 20; ++d)
    EXPECT_EQ(static_cast<long long>(enumerate_qp_basis(d).size()), p[static_cast<std::size_t>(d)])
        << d;
}

TEST(QuasiParticles, ChargeCappedCountsMatchGordonPartitions) {
  for (int k = 1; k <= 3; ++k)
    for (int d = 0; d <= 16; ++d)
      EXPECT_EQ(static_cast<long long>(enumerate_qp_basis(d, k).size()), gordon_count(d, k))
          << "k=" << k << " d=" << d;
}

TEST(QuasiParticles, EnumerationMatchesBruteForceFilter) {
  for (int d = 0; d <= 10; ++d) {
    std::vector<QPMonomial> expected;
    for (const auto &q : all_qp_monomials(d)) {
      EXPECT_EQ(is_basis_monomial(q), satisfies_difference_conditions(q)) << q;
      if (satisfies_difference_conditions(q))
        expected.push_back(q);
    }
    std::sort(expected.begin(), expected.end(), enumeration_less);
    EXPECT_EQ(enumerate_qp_basis(d), expected) << d;
  }
}

TEST(QuasiParticles, EnumerationIsSortedAndUpToConcatenates) {
  const auto all = enumerate_qp_basis_upto(9);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), enumeration_less));
  std::size_t total = 0;
  for (int d = 0; d <= 9; ++d)
    total += enumerate_qp_basis(d).size();
  EXPECT_EQ(all.size(), total);
  for (const auto &q : enumerate_qp_basis_upto(9, 2))
    EXPECT_LE(q.max_charge(), 2);
}

TEST(QuasiParticles, ChargeOneCoefficientsAreGenerators) {
  for (int r = 1; r <= 5; ++r)
    EXPECT_EQ(qp_series_coefficient(1, 3, r, 4, 8), WElement::generator(r, 8, 4)) << r;
}

TEST(QuasiParticles, ChargeTwoCoefficientAgainstProductExpansion) {
  // x^+(u) x^+(u + t h) = sum_{a,b} x(-a) x(-b) u^{a-1} (u + t h)^{b-1}; the
  // u^{r-2} h^j coefficient collects a + b = r + j with weight C(b-1, j) t^j.
  const Rat t = make_rat(-3, 2);
  const std::size_t n = 4;
  const int cap = 12;
  for (int r = 2; r <= 6; ++r) {
    WElement expected(cap, n);
    for (std::size_t j = 0; j < n; ++j)
      for (int b = 1; b < r + static_cast<int>(j); ++b) {
        const int a = r + static_cast<int>(j) - b;
        if (r + static_cast<int>(j) > cap)
          continue;
        const Rat w = Rat(binomial(b - 1, static_cast<long>(j))) * power(t, static_cast<long>(j));
        expected.add_scalar(PBWMonomial({a, b}), j, w);
      }
    EXPECT_EQ(qp_series_coefficient(2, t, r, n, cap), expected) << r;
  }
}

TEST(QuasiParticles, FactoryErrors) {
  QPFactory f(1, 2, 5);
  EXPECT_THROW(f.coefficient(3, 2), std::invalid_argument);
  EXPECT_THROW(f.coefficient(1, 6), std::out_of_range);
  EXPECT_THROW(f.to_w(QPMonomial({{1, -6}})), std::out_of_range);
  EXPECT_EQ(f.to_w(QPMonomial()), WElement::vacuum(5, 2));
}

TEST(QuasiParticles, ClassicalTransitionBlocksInvertible) {
  for (const Rat &t : {Rat(0), Rat(1), Rat(-1), Rat(2), make_rat(1, 3)})
    for (int d = 0; d <= 9; ++d)
      EXPECT_TRUE(classical_block_invertible(d, t)) << "t=" << t << " d=" << d;
}

TEST(QuasiParticles, TransitionMatrixShapeAndTriangularity) {
  const TransitionMatrix tm = transition_matrix(6, 1, 3);
  EXPECT_EQ(tm.rows.size(), tm.columns.size());
  EXPECT_TRUE(tm.all_blocks_invertible());
  ASSERT_EQ(tm.block_invertible.size(), 7u);
  // A column of degree d has h^j parts only in PBW degree d + j.
  for (std::size_t i = 0; i < tm.rows.size(); ++i)
    for (std::size_t j = 0; j < tm.columns.size(); ++j) {
      const int shift = tm.rows[i].degree() - tm.columns[j].degree();
      for (std::size_t b = 0; b < 3; ++b) {
        if (tm.entries[i][j][b] != 0) {
          EXPECT_EQ(static_cast<int>(b), shift) << tm.rows[i] << " " << tm.columns[j];
        }
      }
    }
}

TEST(SeriesVector, GeneratingSeriesCoefficients) {
  const VarSpace space = VarSpace::with_h({{"z", 0, 5}}, 2);
  const ExpandedVector x = ExpandedVector::xplus(space, 6, {{0, 1}});
  for (int r = 1; r <= 6; ++r) {
    const auto *c = x.coefficient({r - 1, 0});
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->at(PBWMonomial({r})), Rat(1));
  }
  // d/dz x^+(z) 1 has x(-3) at z^1 with coefficient 2.
  EXPECT_EQ(x.derivative(0).at({1}).coefficient(PBWMonomial({3})), HSeries(2, {2}));
  const ExpandedVector sq = x * x;
  EXPECT_EQ(sq.at({1}).coefficient(PBWMonomial({2, 1})), HSeries(2, {2}));
  EXPECT_EQ(sq.at({0}).coefficient(PBWMonomial({1, 1})), HSeries(2, {1}));
  EXPECT_THROW((void)(x == ExpandedVector::vacuum(space, 5)), std::invalid_argument);
}

TEST(SeriesVector, ShiftedArgumentProducesHTerms) {
  const VarSpace space = VarSpace::with_h({{"z", 0, 3}}, 3);
  const std::size_t z = space.index("z");
  const ExpandedVector shifted = shifted_product(space, 4, z, {2});
  // x^+(z + 2h) 1 at z^0: sum_r x(-r) (2h)^{r-1}
  const WElement at0 = shifted.at({0});
  EXPECT_EQ(at0.coefficient(PBWMonomial({1})), HSeries(3, {1}));
  EXPECT_EQ(at0.coefficient(PBWMonomial({2})), HSeries(3, {0, 2}));
  EXPECT_EQ(at0.coefficient(PBWMonomial({3})), HSeries(3, {0, 0, 4}));
  EXPECT_EQ(quasi_particle_series(space, 4, z, 1, 5, 2), shifted);
}
