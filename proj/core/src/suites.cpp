#include "qva/suites.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "qva/g_series.hpp"
#include "qva/ideal.hpp"
#include "qva/pbw.hpp"
#include "qva/quasi_particle.hpp"
#include "qva/relations.hpp"
#include "qva/rmatrix.hpp"
#include "qva/vertex.hpp"

namespace qva {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(long v) { return std::to_string(v); }

CheckResult check(std::string name, Params params, bool passed, std::string witness = {}) {
  return {std::move(name), std::move(params), passed, passed ? std::string() : std::move(witness)};
}

std::string first_nonzero(const HSeries &s) {
  for (std::size_t i = 0; i < s.order(); ++i)
    if (s[i] != 0)
      return "coefficient of (h/u)^" + std::to_string(i) + " is " + to_string(s[i]);
  return {};
}

std::string first_nonzero(const MatrixOperator &m) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      for (const auto &[e, v] : m.at(r, c).terms()) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << ") u^" << e[0] << " h^" << e[1] << ": " << v;
        return os.str();
      }
  return {};
}

std::vector<CheckResult> g_suite(const SuiteConfig &cfg) {
  const std::size_t n = cfg.h_order.value_or(30);
  const Params p{{"h_order", str(static_cast<long>(n))}};
  const HSeries g = g_series(n);
  const HSeries f = g_functional_residual(g);
  const HSeries inv = g_inversion_residual(g);
  std::vector<CheckResult> out;
  out.push_back(check("g.functional_equation", p, f.is_zero(), first_nonzero(f)));
  out.push_back(check("g.first_coefficient", p, n > 1 && g[1] == make_rat(1, 2),
                      n > 1 ? "g_1 = " + to_string(g[1]) : "order too small"));
  out.push_back(check("g.inversion", p, inv.is_zero(), first_nonzero(inv)));
  return out;
}

std::vector<CheckResult> rmatrix_suite(const SuiteConfig &cfg) {
  const std::size_t n = cfg.h_order.value_or(20);
  const Params p{{"h_order", str(static_cast<long>(n))}};
  const VarSpace space = rmatrix_space(n);
  const MatrixOperator one = MatrixOperator::identity(space);
  const MatrixOperator r = rbar(space, 0);
  const MatrixOperator r_neg = rbar(space, 0, {-1, 0});
  const MatrixOperator r_shift = rbar(space, 0, {1, 2});
  const MatrixOperator uni = r * r_neg - one;
  const MatrixOperator rl = rl_product(r_neg, r_shift) - one;
  const MatrixOperator lr = lr_product(r_neg, r_shift) - one;
  return {check("rmatrix.unitarity", p, uni.is_zero(), first_nonzero(uni)),
          check("rmatrix.crossing_rl", p, rl.is_zero(), first_nonzero(rl)),
          check("rmatrix.crossing_lr", p, lr.is_zero(), first_nonzero(lr))};
}

std::vector<CheckResult> basis_suite(const SuiteConfig &cfg) {
  std::vector<CheckResult> out;
  const Params p{{"degree", str(cfg.degree)}, {"t", to_string(cfg.t)}};
  std::string witness;
  for (int d = 0; d <= cfg.degree && witness.empty(); ++d) {
    const std::size_t basis = enumerate_qp_basis(d).size();
    const std::size_t pbw = pbw_monomials(d).size();
    if (basis != pbw)
      witness = "degree " + str(d) + ": " + str(static_cast<long>(basis)) + " basis monomials, " +
                str(static_cast<long>(pbw)) + " PBW monomials";
  }
  out.push_back(check("basis.count", p, witness.empty(), witness));

  const int tm_degree = std::min(cfg.degree, 12);
  witness.clear();
  for (int d = 0; d <= tm_degree && witness.empty(); ++d)
    if (!classical_block_invertible(d, cfg.t))
      witness = "degree " + str(d) + " block is singular at h = 0";
  out.push_back(check("basis.transition_invertible",
                      {{"degree", str(tm_degree)}, {"t", to_string(cfg.t)}}, witness.empty(),
                      witness));

  // Random commutativity check of the algebra product.
  std::mt19937_64 rng(cfg.seed);
  const int cap = std::max(cfg.degree, 2);
  auto random_element = [&] {
    WElement w(cap, 2);
    std::uniform_int_distribution<int> deg(0, cap), coeff(-3, 3);
    for (int i = 0; i < 3; ++i) {
      const auto ms = pbw_monomials(deg(rng));
      std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
      w.add(ms[pick(rng)], HSeries(2, {coeff(rng), coeff(rng)}));
    }
    return w;
  };
  const WElement a = random_element(), b = random_element();
  out.push_back(check("basis.commutativity", {{"seed", std::to_string(cfg.seed)}}, a * b == b * a,
                      "a*b != b*a for a = " + a.to_string() + ", b = " + b.to_string()));
  return out;
}

std::vector<CheckResult> ideal_suite(const SuiteConfig &cfg) {
  std::vector<CheckResult> out;
  const int k = cfg.level;
  const std::size_t n = cfg.h_order.value_or(2);
  std::string witness;
  for (int d = 0; d <= cfg.degree && witness.empty(); ++d) {
    const std::size_t rank = classical_ideal_rank(k, d);
    const std::size_t basis = enumerate_qp_basis(d, k).size();
    const std::size_t pbw = pbw_monomials(d).size();
    if (rank + basis != pbw)
      witness = "degree " + str(d) + ": rank " + str(static_cast<long>(rank)) + " + basis " +
                str(static_cast<long>(basis)) + " != " + str(static_cast<long>(pbw));
  }
  out.push_back(check("ideal.complementarity", {{"level", str(k)}, {"degree", str(cfg.degree)}},
                      witness.empty(), witness));

  const int mem_degree = std::min(cfg.degree, 8);
  const IdealSpec spec{k, 0, mem_degree + static_cast<int>(n), n};
  witness.clear();
  for (const auto &q : enumerate_qp_basis_upto(mem_degree)) {
    if (q.max_charge() < k + 1)
      continue;
    if (!membership_test(qp_monomial_to_w(q, 0, n, spec.degree_cap), spec).member) {
      witness = q.to_string() + " is not in the ideal";
      break;
    }
  }
  out.push_back(check("ideal.charge_membership",
                      {{"level", str(k)}, {"degree", str(mem_degree)}, {"h_order", str(static_cast<long>(n))}},
                      witness.empty(), witness));

  // Random products b * (ideal vector) stay in the ideal.
  std::mt19937_64 rng(cfg.seed);
  witness.clear();
  if (mem_degree >= k + 1) {
    std::uniform_int_distribution<int> deg(k + 1, mem_degree);
    const int d = deg(rng);
    const IdealSpec ts{k, cfg.t, mem_degree + static_cast<int>(n), n};
    const GradedSpan span = ideal_graded_span(ts, d);
    std::uniform_int_distribution<std::size_t> pick(0, span.vectors.size() - 1);
    const std::size_t i = pick(rng);
    const auto bs = pbw_monomials(mem_degree - d);
    std::uniform_int_distribution<std::size_t> pick_b(0, bs.size() - 1);
    const PBWMonomial b = bs[pick_b(rng)];
    WElement v(ts.degree_cap, n);
    for (const auto &[m, c] : span.vectors[i].terms())
      v.add_truncating(m, c);
    const WElement prod = WElement::monomial(b, HSeries::one(n), ts.degree_cap) * v;
    if (!membership_test(prod, ts).member)
      witness = b.to_string() + " times span vector " + str(static_cast<long>(i)) +
                " of degree " + str(d) + " is not in the ideal";
  }
  out.push_back(check("ideal.closure_random",
                      {{"level", str(k)}, {"t", to_string(cfg.t)}, {"seed", std::to_string(cfg.seed)}},
                      witness.empty(), witness));

  const auto gen = principal_generator_closure(k, k + 5, n);
  witness.clear();
  if (!gen.no_negative_powers)
    witness = "negative powers of z present";
  else if (!gen.mismatches.empty())
    witness = "z-coefficient for p = " + str(gen.mismatches.front()) + " differs from R(p)1";
  out.push_back(check("ideal.principal_generator", {{"level", str(k)}, {"max_p", str(k + 5)}},
                      gen.passed, witness));

  witness.clear();
  for (int kk = 1; kk <= 6 && witness.empty(); ++kk)
    for (int l = 1; kk + l + 1 <= 8 && witness.empty(); ++l)
      if (!factorization_check(kk, l, cfg.t).passed())
        witness = "k = " + str(kk) + ", l = " + str(l);
  out.push_back(check("ideal.factorization", {{"t", to_string(cfg.t)}}, witness.empty(), witness));

  if (cfg.t != 0) {
    const auto r = tneq0_degree2_expansion(cfg.t);
    witness = !r.order0 ? "h^0" : !r.order1 ? "h^1" : !r.order2 ? "h^2" : "";
    out.push_back(check("ideal.degree_two_expansion", {{"t", to_string(cfg.t)}}, r.passed(),
                        witness + " coefficient differs"));
  }
  return out;
}

std::vector<CheckResult> relations_suite(const SuiteConfig &cfg) {
  std::vector<CheckResult> out;
  const Rat &t = cfg.t;
  for (int p = 1; p <= cfg.pmax; ++p)
    for (int q = p; q <= cfg.pmax; ++q) {
      const Params pq{{"p", str(p)}, {"q", str(q)}, {"t", to_string(t)}};
      std::string witness;
      for (int k = 1; k <= p && witness.empty(); ++k)
        for (auto fam : {ExchangeFamily::first, ExchangeFamily::second}) {
          const auto r = exchange_identity_check(p, q, k, fam, t);
          if (!r.passed()) {
            witness = std::string(fam == ExchangeFamily::first ? "first" : "second") +
                      " family, k = " + str(k) + ": " + r.lhs_shifts + " vs " + r.rhs_shifts;
            break;
          }
        }
      out.push_back(check("relations.exchange", pq, witness.empty(), witness));
      if (t == 0)
        continue;
      for (int l = 1; l <= 2 * p; ++l) {
        Params pl = pq;
        pl.emplace_back("l", str(l));
        const AlphaSolution a = solve_alpha(p, q, l, t);
        witness.clear();
        const auto res = alpha_residuals(a);
        for (std::size_t i = 0; i < res.size() && witness.empty(); ++i)
          if (res[i] != 0)
            witness = "equation " + str(static_cast<long>(i)) + " residual " + to_string(res[i]);
        out.push_back(check("relations.alpha_system", pl, witness.empty(), witness));

        const auto v = valuation_check(a, static_cast<std::size_t>(l) + 1, 2);
        out.push_back(check("relations.valuation", pl, v.passed,
                            "h-valuation " + str(static_cast<long>(v.valuation)) +
                                (v.conclusive ? "" : " (window vanishes)")));

        const bool combined = combined_relation_lhs(a, 3, 2) == combined_relation_rhs(a, 3, 2);
        out.push_back(check("relations.combined", pl, combined, "sides differ modulo h^3"));

        const auto d = derivative_relation_check(a, 2);
        out.push_back(check("relations.derivative", pl, d.passed, d.witness));
      }
    }
  return out;
}

std::vector<CheckResult> slocality_suite(const SuiteConfig &cfg) {
  std::vector<CheckResult> out;
  const std::size_t n = cfg.h_order.value_or(6);
  for (int c : {0, 1, -2}) {
    const auto r = check_s_locality(c, n, 3, 3);
    out.push_back(check("slocality.locality",
                        {{"c", str(c)}, {"h_order", str(static_cast<long>(n))}, {"n_loc", str(r.n_loc)}},
                        r.passed(), r.witness));
  }
  const auto crit = check_critical_relation(n, 3);
  out.push_back(check("slocality.critical_relation", {{"h_order", str(static_cast<long>(n))}},
                      crit.passed, crit.witness));
  const int max_j = 10;
  const auto poles = pole_witness(1, static_cast<std::size_t>(max_j) + 1, max_j);
  std::string witness;
  for (const auto &p : poles)
    if (!p.nonzero) {
      witness = "z^-" + str(p.j) + " coefficient vanishes";
      break;
    }
  out.push_back(check("slocality.pole_witness",
                      {{"c", "1"}, {"max_j", str(max_j)}, {"h_order", str(max_j + 1)}},
                      witness.empty(), witness));
  return out;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"g",     "rmatrix",   "basis",
                                              "ideal", "relations", "slocality"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string &name, const SuiteConfig &config) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto &n : suite_names()) {
      auto part = run_suite(n, config);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "g")
    return g_suite(config);
  if (name == "rmatrix")
    return rmatrix_suite(config);
  if (name == "basis")
    return basis_suite(config);
  if (name == "ideal")
    return ideal_suite(config);
  if (name == "relations")
    return relations_suite(config);
  if (name == "slocality")
    return slocality_suite(config);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace qva
