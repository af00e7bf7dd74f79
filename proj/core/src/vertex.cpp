#include "qva/vertex.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qva/g_series.hpp"

namespace qva {

HSeries y_pair_factor(const Rat &c, std::size_t order) {
  const HSeries g = g_series(order);
  const HSeries p(order, {1, 1});
  return p * negate_argument(g) * compose_shift(g, c + 2);
}

HSeries s_pair_factor(const Rat &c, std::size_t order) {
  const HSeries g = g_series(order);
  const HSeries p(order, {1, -1});
  return p * p * g * g * transform_argument(g, -1, -c) * transform_argument(g, -1, c + 2);
}

HSeries locality_factor(const Rat &c, std::size_t order) {
  const HSeries g = g_series(order);
  const HSeries p(order, {1, -1});
  return p * g * transform_argument(g, -1, -c);
}

VarSpace vertex_space(const VertexCaps &caps) {
  if (caps.h_order == 0)
    throw std::invalid_argument("vertex caps need a positive h-order");
  int lo = -static_cast<int>(caps.h_order) + 1;
  for (int x : caps.u_hi)
    lo -= x;
  for (int x : caps.v_hi)
    lo -= x;
  std::vector<Variable> vars{{caps.z_name, lo, caps.degree_cap}};
  for (std::size_t i = 0; i < caps.u_hi.size(); ++i)
    vars.push_back({"u" + std::to_string(i + 1), 0, caps.u_hi[i]});
  for (std::size_t j = 0; j < caps.v_hi.size(); ++j)
    vars.push_back({"v" + std::to_string(j + 1), 0, caps.v_hi[j]});
  return VarSpace::with_h(std::move(vars), caps.h_order);
}

namespace {

ExpandedScalar pair_product(const HSeries &factor, const VertexCaps &caps) {
  const VarSpace space = vertex_space(caps);
  const std::size_t n = caps.u_hi.size();
  ExpandedScalar out = ExpandedScalar::constant(space, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < caps.v_hi.size(); ++j) {
      const LinearForm rest{{1 + i, Rat(1)}, {1 + n + j, Rat(-1)}};
      out = out * substitute_inverse_series(space, factor, 0, 1, rest);
    }
  return out;
}

} // namespace

ExpandedScalar y_prefactor(const Rat &c, const VertexCaps &caps) {
  return pair_product(y_pair_factor(c, caps.h_order), caps);
}

ExpandedScalar s_prefactor(const Rat &c, const VertexCaps &caps) {
  return pair_product(s_pair_factor(c, caps.h_order), caps);
}

VertexResult y_apply(const Rat &c, const VertexCaps &caps) {
  const VarSpace space = vertex_space(caps);
  const std::size_t n = caps.u_hi.size();
  ExpandedVector product = ExpandedVector::vacuum(space, caps.degree_cap);
  for (std::size_t i = 0; i < n; ++i)
    product = product * ExpandedVector::xplus(space, caps.degree_cap, {{0, Rat(1)}, {1 + i, Rat(1)}});
  for (std::size_t j = 0; j < caps.v_hi.size(); ++j)
    product = product * ExpandedVector::xplus(space, caps.degree_cap, {{1 + n + j, Rat(1)}});
  ExpandedScalar pre = y_prefactor(c, caps);
  ExpandedVector value = pre * product;
  return {std::move(pre), std::move(value)};
}

ExpandedVector VertexResult::coefficient(const std::vector<int> &u_powers,
                                         const std::vector<int> &v_powers) const {
  const VarSpace &space = value.space();
  const std::size_t n = u_powers.size();
  if (1 + n + v_powers.size() + 1 != space.size())
    throw std::out_of_range("coefficient: wrong number of u or v powers");
  ExpandedVector out = value;
  for (std::size_t k = 0; k < n + v_powers.size(); ++k) {
    const int p = k < n ? u_powers[k] : v_powers[k - n];
    const Variable &var = space[1 + k];
    if (p < var.lo || p > var.hi)
      throw std::out_of_range("coefficient: power of " + var.name + " outside its cap");
    out = out.slice(1 + k, p);
  }
  const VarSpace zh({space[0], space[space.size() - 1]});
  return out.reembed(zh);
}

ExpandedVector apply_generator_vertex(const Rat &c, const ExpandedVector &in,
                                      const std::string &z_name, const VarSpace &target) {
  if (in.space().has(z_name) || !target.has(z_name))
    throw std::invalid_argument("apply_generator_vertex: bad vertex variable");
  std::map<PBWMonomial, ExpandedScalar> by_monomial;
  for (const auto &[e, coeffs] : in.terms())
    for (const auto &[m, x] : coeffs) {
      auto it = by_monomial.try_emplace(m, in.space()).first;
      it->second.add_term(e, x);
    }
  ExpandedVector out(target, in.degree_cap());
  for (const auto &[m, scalar] : by_monomial) {
    VertexCaps caps;
    caps.h_order = target.h_order();
    caps.degree_cap = in.degree_cap();
    caps.u_hi = {0};
    caps.z_name = z_name;
    for (int r : m.parts())
      caps.v_hi.push_back(r - 1);
    const VertexResult y = y_apply(c, caps);
    const ExpandedVector image = y.coefficient({0}, caps.v_hi).reembed(target);
    out += reembed(scalar, target) * image;
  }
  return out;
}

namespace {

struct LocalityGeometry {
  int lo_far;  // lower bound for the outer vertex variable
  int hi_far;  // upper bound for the outer vertex variable
  int lo_near; // lower bound for the inner vertex variable
  int hi_near;
};

// Y(x(-1)1, outer) Y(x(-1)1, inner) v in the space {z1, z2, h}.
ExpandedVector double_vertex(const Rat &c, const ExpandedVector &v, const std::string &outer,
                             const std::string &inner, const LocalityGeometry &g,
                             std::size_t h_order) {
  const VarSpace inner_space = VarSpace::with_h({{inner, g.lo_near, g.hi_near}}, h_order);
  const ExpandedVector first = apply_generator_vertex(c, v, inner, inner_space);
  std::vector<Variable> vars(2);
  vars[outer == "z1" ? 0 : 1] = {outer, g.lo_far, g.hi_far};
  vars[inner == "z1" ? 0 : 1] = {inner, g.lo_near, g.hi_near};
  return apply_generator_vertex(c, first, outer, VarSpace::with_h(vars, h_order));
}

std::string describe_first(const ExpandedVector &v, int window) {
  for (const auto &[e, coeffs] : v.terms()) {
    if (std::abs(e[0]) > window || std::abs(e[1]) > window)
      continue;
    for (const auto &[m, x] : coeffs) {
      std::ostringstream os;
      os << "z1^" << e[0] << " z2^" << e[1] << " h^" << e[2] << " " << m << ": " << x;
      return os.str();
    }
  }
  return {};
}

} // namespace

LocalityReport check_s_locality(const Rat &c, std::size_t h_order, int window, int nloc_max) {
  if (window < 0 || nloc_max < 0)
    throw std::invalid_argument("check_s_locality: negative window or bound");
  LocalityReport report;
  report.c = c;
  report.h_order = h_order;
  report.window = window;
  report.nloc_max = nloc_max;

  const int n = static_cast<int>(h_order);
  const int reach = window + nloc_max;
  const VarSpace final_space =
      VarSpace::with_h({{"z1", -reach, reach}, {"z2", -reach, reach}}, h_order);
  const HSeries psi = locality_factor(c, h_order);

  std::vector<ExpandedVector> differences;
  for (int dv = 0; dv <= 1; ++dv) {
    const int cap = 2 * reach + n + 1 + dv;
    const VarSpace h_only = VarSpace::with_h({}, h_order);
    // x^+(0)1 = x(-1)1.
    const ExpandedVector v = dv == 0 ? ExpandedVector::vacuum(h_only, cap)
                                     : ExpandedVector::xplus(h_only, cap, {});
    const LocalityGeometry g{-reach, cap, -(n + dv), reach};

    // Left side: expansions in negative powers of z1.
    const ExpandedVector p12 = double_vertex(c, v, "z1", "z2", g, h_order);
    const VarSpace psi12_space =
        VarSpace::with_h({{"z1", -reach - cap - n, 0}, {"z2", 0, reach + n + dv}}, h_order);
    const ExpandedScalar psi12 =
        substitute_inverse_series(psi12_space, psi, 0, 1, {{1, Rat(-1)}});
    const ExpandedVector lhs = multiply_into(psi12, p12, final_space);

    // Right side: the mirror image, negative powers of z2.
    const ExpandedVector p21 = double_vertex(c, v, "z2", "z1", g, h_order);
    const VarSpace psi21_space =
        VarSpace::with_h({{"z1", 0, reach + n + dv}, {"z2", -reach - cap - n, 0}}, h_order);
    const ExpandedScalar psi21 =
        substitute_inverse_series(psi21_space, psi, 1, 1, {{0, Rat(-1)}});
    const ExpandedVector rhs = multiply_into(psi21, p21, final_space);

    differences.push_back(lhs - rhs);
  }

  const ExpandedScalar z12 = ExpandedScalar::linear(final_space, {{0, Rat(1)}, {1, Rat(-1)}});
  for (int k = 0; k <= nloc_max; ++k) {
    bool all_zero = true;
    std::string witness;
    for (auto &d : differences) {
      const std::string w = describe_first(d, window);
      if (!w.empty() && all_zero) {
        all_zero = false;
        witness = w;
      }
    }
    if (all_zero) {
      report.n_loc = k;
      report.witness.clear();
      return report;
    }
    report.witness = witness;
    for (auto &d : differences)
      d = z12 * d;
  }
  return report;
}

RelationReport check_critical_relation(std::size_t h_order, int window) {
  const int n = static_cast<int>(h_order);
  const int reach = window + 1;
  const int cap = 2 * reach + n + 1;
  const Rat c = -2;
  const VarSpace final_space =
      VarSpace::with_h({{"z1", -reach, reach}, {"z2", -reach, reach}}, h_order);
  const VarSpace h_only = VarSpace::with_h({}, h_order);
  const ExpandedVector vac = ExpandedVector::vacuum(h_only, cap);
  const LocalityGeometry g{-reach, cap, -n, reach};
  const ExpandedVector p12 = double_vertex(c, vac, "z1", "z2", g, h_order).reembed(final_space);
  const ExpandedVector p21 = double_vertex(c, vac, "z2", "z1", g, h_order).reembed(final_space);
  const std::size_t h = final_space.index("h");
  const ExpandedScalar left =
      ExpandedScalar::linear(final_space, {{0, Rat(1)}, {1, Rat(-1)}, {h, Rat(-1)}});
  const ExpandedScalar right =
      ExpandedScalar::linear(final_space, {{0, Rat(1)}, {1, Rat(-1)}, {h, Rat(1)}});
  const ExpandedVector diff = left * p12 - right * p21;
  RelationReport r;
  r.witness = describe_first(diff, window);
  r.passed = r.witness.empty();
  return r;
}

std::vector<PoleTerm> pole_witness(const Rat &c, std::size_t h_order, int max_j) {
  VertexCaps caps;
  caps.h_order = h_order;
  caps.degree_cap = static_cast<int>(h_order) + 1;
  caps.u_hi = {0};
  caps.v_hi = {0};
  const ExpandedVector series = y_apply(c, caps).coefficient({0}, {0});
  std::vector<PoleTerm> out;
  for (int j = 1; j <= max_j; ++j) {
    PoleTerm term{j, false, h_order, WElement(caps.degree_cap, h_order)};
    if (-j >= series.space()[0].lo)
      term.coefficient = series.at({-j, 0});
    for (const auto &[m, s] : term.coefficient.terms())
      term.h_valuation = std::min(term.h_valuation, s.valuation());
    term.nonzero = !term.coefficient.is_zero();
    out.push_back(std::move(term));
  }
  return out;
}

} // namespace qva
