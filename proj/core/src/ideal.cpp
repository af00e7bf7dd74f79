#include "qva/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qva/linalg.hpp"
#include "qva/quasi_particle.hpp"
#include "qva/relations.hpp"
#include "qva/vertex.hpp"

namespace qva {

namespace {

// Columns ordered with the most balanced partitions first (smaller largest
// part, then lexicographic). The leading terms of b R(p) then tend to be
// distinct, which keeps elimination short.
std::map<PBWMonomial, std::size_t> balanced_columns(int d) {
  auto parts = pbw_monomials(d);
  std::stable_sort(parts.begin(), parts.end(), [](const PBWMonomial &a, const PBWMonomial &b) {
    const int ma = a.parts().empty() ? 0 : a.parts().front();
    const int mb = b.parts().empty() ? 0 : b.parts().front();
    if (ma != mb)
      return ma < mb;
    return a < b;
  });
  std::map<PBWMonomial, std::size_t> out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.emplace(parts[i], i);
  return out;
}

RatRow classical_row(const WElement &w, int d, const std::map<PBWMonomial, std::size_t> &cols) {
  RatRow row;
  for (const auto &[m, c] : w.terms())
    if (m.degree() == d && c[0] != 0)
      row.emplace_back(cols.at(m), c[0]);
  return row;
}

bool member_modulo(const WElement &w, const IdealSpec &spec) {
  const std::size_t n = w.h_order();
  std::map<int, std::vector<std::pair<PBWMonomial, std::size_t>>> by_weight;
  for (const auto &[m, c] : w.terms())
    for (std::size_t b = 0; b < n; ++b)
      if (c[b] != 0)
        by_weight[m.degree() - static_cast<int>(b)].emplace_back(m, b);

  for (const auto &[d, coords] : by_weight) {
    if (d < spec.level + 1)
      return false;
    std::map<std::pair<PBWMonomial, std::size_t>, std::size_t> index;
    for (std::size_t b = 0; b < n; ++b)
      for (auto &m : pbw_monomials(d + static_cast<int>(b)))
        index.emplace(std::make_pair(std::move(m), b), index.size());
    SparseEchelon e(index.size());
    for (std::size_t shift = 0; shift < n; ++shift) {
      IdealSpec sub = spec;
      sub.h_order = n - shift;
      sub.degree_cap = d + static_cast<int>(n) - 1;
      const GradedSpan span = ideal_graded_span(sub, d + static_cast<int>(shift));
      for (const auto &v : span.vectors) {
        RatRow row;
        for (const auto &[m, c] : v.terms())
          for (std::size_t b = 0; b + shift < n && b < c.order(); ++b)
            if (c[b] != 0)
              row.emplace_back(index.at({m, b + shift}), c[b]);
        e.insert(row);
      }
    }
    RatRow target;
    for (const auto &[m, b] : coords)
      target.emplace_back(index.at({m, b}), w.coefficient(m)[b]);
    if (!e.contains(target))
      return false;
  }
  return true;
}

} // namespace

GradedSpan ideal_graded_span(const IdealSpec &spec, int d) {
  if (spec.level < 1)
    throw std::invalid_argument("ideal level must be positive");
  if (d > spec.degree_cap)
    throw std::out_of_range("ideal_graded_span: degree above the cap");
  GradedSpan span;
  span.degree = d;
  const int cap = d + static_cast<int>(spec.h_order) - 1;
  QPFactory factory(spec.t, spec.h_order, cap);
  const auto cols = balanced_columns(std::max(d, 0));
  SparseEchelon e(cols.size());
  for (int p = spec.level + 1; p <= d; ++p) {
    const WElement &r = factory.coefficient(spec.level + 1, p);
    for (const auto &b : pbw_monomials(d - p)) {
      WElement v = WElement::monomial(b, HSeries::one(spec.h_order), cap) * r;
      e.insert(classical_row(v, d, cols));
      span.vectors.push_back(std::move(v));
      span.generator.push_back(p);
      span.multiplier.push_back(b);
    }
  }
  span.classical_rank = e.rank();
  return span;
}

std::size_t classical_ideal_rank(int level, int d) {
  if (level < 1)
    throw std::invalid_argument("ideal level must be positive");
  if (d < level + 1)
    return 0;
  const auto cols = balanced_columns(d);
  QPFactory factory(0, 1, d);
  SparseEchelon e(cols.size());
  for (int p = level + 1; p <= d; ++p) {
    const WElement &r = factory.coefficient(level + 1, p);
    for (const auto &b : pbw_monomials(d - p)) {
      RatRow row;
      for (const auto &[m, c] : r.terms())
        row.emplace_back(cols.at(b * m), c[0]);
      e.insert(row);
      if (e.rank() == cols.size())
        return e.rank();
    }
  }
  return e.rank();
}

std::size_t quotient_graded_dim(int level, int d) {
  return pbw_monomials(d).size() - classical_ideal_rank(level, d);
}

MembershipReport membership_test(const WElement &w, const IdealSpec &spec, std::size_t max_shift) {
  if (w.h_order() != spec.h_order)
    throw std::out_of_range("membership_test: h-order of the vector differs from the ideal data");
  for (const auto &[m, c] : w.terms())
    if (m.degree() > spec.degree_cap)
      throw std::out_of_range("membership_test: vector exceeds the degree cap");
  MembershipReport r;
  for (std::size_t n = 0; n <= max_shift; ++n) {
    const std::size_t order = spec.h_order + n;
    WElement shifted(w.degree_cap() + static_cast<int>(n), order);
    for (const auto &[m, c] : w.terms())
      for (std::size_t b = 0; b < c.order(); ++b)
        shifted.add_scalar(m, b + n, c[b]);
    IdealSpec s = spec;
    s.h_order = order;
    if (member_modulo(shifted, s)) {
      r.member = true;
      r.h_shift = n;
      return r;
    }
  }
  return r;
}

FactorizationReport factorization_check(int k, int l, const Rat &t) {
  if (k < 1 || l < 1)
    throw std::out_of_range("factorization_check needs k, l >= 1");
  const std::vector<QPFactor> whole{{k + l + 1, 0}};
  const std::vector<QPFactor> split{{l, t * (k + 1)}, {k + 1, 0}};
  FactorizationReport r;
  r.multiset_equal = shifts_of(whole, t) == shifts_of(split, t);
  const std::size_t h_order = 3;
  const int window = 2;
  const int cap = window + k + l + 1 + static_cast<int>(h_order) - 1;
  const VarSpace space = VarSpace::with_h({{"z", 0, window}}, h_order);
  r.series_equal = factor_product(whole, t, space, cap) == factor_product(split, t, space, cap);
  return r;
}

GeneratorReport principal_generator_closure(int k, int max_degree, std::size_t h_order) {
  VertexCaps caps;
  caps.h_order = h_order;
  caps.degree_cap = max_degree;
  caps.u_hi.assign(static_cast<std::size_t>(k + 1), 0);
  const ExpandedVector series =
      y_apply(0, caps).coefficient(std::vector<int>(static_cast<std::size_t>(k + 1), 0), {});
  GeneratorReport r;
  r.no_negative_powers = std::all_of(series.terms().begin(), series.terms().end(),
                                     [](const auto &term) { return term.first[0] >= 0; });
  QPFactory factory(0, h_order, max_degree);
  for (int p = k + 1; p <= max_degree; ++p)
    if (!(series.at({p - k - 1, 0}) == factory.coefficient(k + 1, p)))
      r.mismatches.push_back(p);
  r.passed = r.no_negative_powers && r.mismatches.empty();
  return r;
}

DegreeTwoReport tneq0_degree2_expansion(const Rat &t, int window) {
  const std::size_t h_order = 3;
  const int cap = window + 6;
  const VarSpace space = VarSpace::with_h({{"z", 0, window + 2}}, h_order);
  const VarSpace shown = VarSpace::with_h({{"z", 0, window}}, h_order);
  const std::size_t h = space.index("h");
  const ExpandedVector e = quasi_particle_series(space, cap, 0, 2, t);
  const ExpandedVector x = ExpandedVector::xplus(space, cap, {{0, Rat(1)}});
  const ExpandedVector x2 = x * x;
  auto same = [&](const ExpandedVector &a, const ExpandedVector &b) {
    return a.reembed(shown) == b.reembed(shown);
  };
  DegreeTwoReport r;
  r.order0 = same(e.slice(h, 0), x2);
  r.order1 = same(e.slice(h, 1), x2.derivative(0) * (t / 2));
  r.order2 = same(e.slice(h, 2), x * x.derivative(0).derivative(0) * (t * t / 2));
  return r;
}

} // namespace qva
