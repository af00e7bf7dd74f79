#include <gtest/gtest.h>

#include "qva/g_series.hpp"
#include "qva/vertex.hpp"

using namespace qva;

namespace {

HSeries geometric(std::size_t order) { return reciprocal(HSeries(order, {1, -1})); }

} // namespace

TEST(VertexFactors, PairFactorAtLevelZeroIsABinomial) {
  EXPECT_EQ(y_pair_factor(0, 12), HSeries(12, {1, 1}));
}

TEST(VertexFactors, PairFactorAtMinusTwoIsGeometric) {
  EXPECT_EQ(y_pair_factor(-2, 12), geometric(12));
}

TEST(VertexFactors, PairFactorClosedForm) {
  // g(z) g(-z + 2h) = 1 turns G(x / (1 + (c+2)x)) into 1 / G(-x / (1 + c x)).
  const std::size_t n = 14;
  const HSeries g = g_series(n);
  for (const Rat &c : {Rat(1), Rat(3), make_rat(-1, 2), make_rat(5, 3)}) {
    const HSeries closed =
        HSeries(n, {1, 1}) * negate_argument(g) * reciprocal(compose_shift(negate_argument(g), c));
    EXPECT_EQ(y_pair_factor(c, n), closed) << c;
  }
}

TEST(VertexFactors, BraidingFactorIsUnitary) {
  for (const Rat &c : {Rat(0), Rat(1), Rat(-2), make_rat(7, 4)}) {
    const HSeries s = s_pair_factor(c, 16);
    EXPECT_EQ(s * negate_argument(s), HSeries::one(16)) << c;
  }
}

TEST(VertexFactors, LocalityFactorInvertsPairFactor) {
  for (const Rat &c : {Rat(0), Rat(1), Rat(-2), make_rat(-5, 3)})
    EXPECT_EQ(locality_factor(c, 16) * y_pair_factor(c, 16), HSeries::one(16)) << c;
}

TEST(VertexMaps, PrefactorAtLevelZero) {
  VertexCaps caps;
  caps.h_order = 5;
  caps.degree_cap = 4;
  caps.u_hi = {0};
  caps.v_hi = {0};
  const VarSpace space = vertex_space(caps);
  const ExpandedScalar pre = y_prefactor(0, caps);
  // The single pair factor is 1 - h/(-z) = 1 + h/z exactly.
  ExpandedScalar expected = ExpandedScalar::constant(space, 1);
  expected.add_term({-1, 0, 0, 1}, 1);
  EXPECT_EQ(pre, expected);
}

TEST(VertexMaps, PrefactorMatchesDirectSubstitution) {
  VertexCaps caps;
  caps.h_order = 5;
  caps.degree_cap = 3;
  caps.u_hi = {2};
  caps.v_hi = {2};
  const VarSpace space = vertex_space(caps);
  const Rat c = 1;
  // phi(h / (z + u - v)) with negative powers on z.
  const ExpandedScalar direct = substitute_inverse_series(
      space, y_pair_factor(c, caps.h_order), space.index("z"), 1,
      {{space.index("u1"), 1}, {space.index("v1"), -1}});
  EXPECT_EQ(y_prefactor(c, caps), direct);
}

TEST(VertexMaps, TwoPairPrefactorIsAProduct) {
  VertexCaps one, two;
  one.h_order = two.h_order = 4;
  one.degree_cap = two.degree_cap = 3;
  one.u_hi = {1};
  one.v_hi = {1};
  two.u_hi = {1};
  two.v_hi = {1, 1};
  const Rat c = 2;
  const VarSpace space = vertex_space(two);
  const std::size_t z = space.index("z"), u = space.index("u1");
  const HSeries phi = y_pair_factor(c, 4);
  const ExpandedScalar f1 =
      substitute_inverse_series(space, phi, z, 1, {{u, 1}, {space.index("v1"), -1}});
  const ExpandedScalar f2 =
      substitute_inverse_series(space, phi, z, 1, {{u, 1}, {space.index("v2"), -1}});
  EXPECT_EQ(y_prefactor(c, two), f1 * f2);
}

TEST(VertexMaps, VertexOperatorOnTheVacuumIsTheGeneratingSeries) {
  const VarSpace target = VarSpace::with_h({{"z", 0, 5}}, 3);
  const ExpandedVector vac = ExpandedVector::vacuum(VarSpace::with_h({}, 3), 6);
  const ExpandedVector image = apply_generator_vertex(1, vac, "z", target);
  EXPECT_EQ(image, ExpandedVector::xplus(target, 6, {{0, 1}}));
  EXPECT_THROW(apply_generator_vertex(1, image, "z", target), std::invalid_argument);
}

TEST(VertexMaps, ClassicalLimitOfYOnAGenerator) {
  VertexCaps caps;
  caps.h_order = 3;
  caps.degree_cap = 6;
  caps.u_hi = {0};
  caps.v_hi = {0};
  const VertexResult y = y_apply(1, caps);
  const ExpandedVector coeff = y.coefficient({0}, {0});
  // Modulo h: Y(x(-1)1, z) x(-1)1 = sum_r x(-r) x(-1) z^{r-1}.
  for (int r = 1; r <= 5; ++r)
    EXPECT_EQ(coeff.at({r - 1}).coefficient(PBWMonomial({r, 1}))[0], Rat(1)) << r;
  EXPECT_THROW(y.coefficient({1}, {0}), std::out_of_range);
  EXPECT_THROW(y.coefficient({0}, {}), std::out_of_range);
}

TEST(PoleWitness, CoefficientsMatchPairFactorExpansion) {
  // z^{-j} coefficient: sum_r Phi_{r-1+j} h^{r-1+j} x(-r) x(-1).
  const Rat c = 1;
  const std::size_t n = 7;
  const HSeries phi = y_pair_factor(c, n);
  const auto terms = pole_witness(c, n, 6);
  ASSERT_EQ(terms.size(), 6u);
  for (const auto &p : terms) {
    WElement expected(p.coefficient.degree_cap(), n);
    for (int r = 1; r - 1 + p.j < static_cast<int>(n); ++r)
      if (r + 1 <= expected.degree_cap())
        expected.add_scalar(PBWMonomial({r, 1}), static_cast<std::size_t>(r - 1 + p.j),
                            phi[static_cast<std::size_t>(r - 1 + p.j)]);
    EXPECT_EQ(p.coefficient, expected) << p.j;
  }
}

TEST(PoleWitness, EveryPoleOrderUpToTenAppears) {
  // The leading h-power of the z^{-j} coefficient is h^j unless the pair
  // factor coefficient Phi_j vanishes (it does for c = -1, j = 3).
  for (const Rat &c : {Rat(1), Rat(-2), Rat(2), Rat(-1), Rat(3)}) {
    const HSeries phi = y_pair_factor(c, 11);
    const auto terms = pole_witness(c, 11, 10);
    ASSERT_EQ(terms.size(), 10u);
    for (const auto &p : terms) {
      EXPECT_TRUE(p.nonzero) << "c=" << c << " j=" << p.j;
      EXPECT_GE(p.h_valuation, static_cast<std::size_t>(p.j));
      if (phi[static_cast<std::size_t>(p.j)] != 0) {
        EXPECT_EQ(p.h_valuation, static_cast<std::size_t>(p.j)) << "c=" << c << " j=" << p.j;
      }
    }
  }
}

TEST(PoleWitness, NoPolesModuloH) {
  for (const auto &p : pole_witness(1, 1, 10))
    EXPECT_FALSE(p.nonzero) << p.j;
  // The h^1 slice carries a simple pole only.
  const auto terms = pole_witness(1, 2, 10);
  EXPECT_TRUE(terms[0].nonzero);
  for (std::size_t i = 1; i < terms.size(); ++i)
    EXPECT_FALSE(terms[i].nonzero) << terms[i].j;
}

TEST(PoleWitness, LevelZeroHasOnlyASimplePole) {
  const auto terms = pole_witness(0, 11, 10);
  EXPECT_TRUE(terms[0].nonzero);
  for (std::size_t i = 1; i < terms.size(); ++i)
    EXPECT_FALSE(terms[i].nonzero) << terms[i].j;
}

TEST(SLocality, HoldsWithoutExtraPowers) {
  for (const Rat &c : {Rat(0), Rat(1), Rat(-2)}) {
    const LocalityReport r = check_s_locality(c, 4, 3, 2);
    EXPECT_TRUE(r.passed()) << c << ": " << r.witness;
    EXPECT_EQ(r.n_loc, 0) << c;
  }
  EXPECT_THROW(check_s_locality(1, 4, -1, 2), std::invalid_argument);
}

TEST(SLocality, CriticalLevelRelationOnTheVacuum) {
  const RelationReport r = check_critical_relation(5, 3);
  EXPECT_TRUE(r.passed) << r.witness;
}
