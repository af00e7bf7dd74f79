#include "qva/relations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qva/linalg.hpp"
#include "qva/quasi_particle.hpp"

namespace qva {

ShiftMultiset::ShiftMultiset(std::vector<Rat> shifts) : shifts_(std::move(shifts)) {
  std::sort(shifts_.begin(), shifts_.end());
}

ShiftMultiset ShiftMultiset::quasi_particle(int m, const Rat &t, const Rat &shift) {
  std::vector<Rat> s;
  for (int j = 0; j < m; ++j)
    s.push_back(shift + t * j);
  return ShiftMultiset(std::move(s));
}

ShiftMultiset ShiftMultiset::operator+(const ShiftMultiset &rhs) const {
  std::vector<Rat> s = shifts_;
  s.insert(s.end(), rhs.shifts_.begin(), rhs.shifts_.end());
  return ShiftMultiset(std::move(s));
}

std::string ShiftMultiset::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < shifts_.size(); ++i)
    os << (i ? "," : "") << shifts_[i];
  os << "}";
  return os.str();
}

std::vector<Rat> relation_nodes(int p, int q, const Rat &t) {
  std::vector<Rat> c;
  for (int i = 0; i < p; ++i)
    c.push_back(t * i);
  for (int i = 1; i <= p; ++i)
    c.push_back(t * (q + i));
  return c;
}

ExchangeIdentity exchange_identity(int p, int q, int index, const Rat &t) {
  if (p < 1 || q < p || index < 1 || index > 2 * p)
    throw std::out_of_range("exchange identity needs q >= p >= 1 and 1 <= index <= 2p");
  const auto c = relation_nodes(p, q, t);
  const Rat ck = c[static_cast<std::size_t>(index - 1)];
  const Rat pt = t * p;
  ExchangeIdentity e;
  e.lhs = {{p, ck}, {q, pt}};
  if (index <= p)
    e.rhs = {{index - 1, pt}, {p + q - index + 1, ck}};
  else {
    const int k = index - p;
    e.rhs = {{p - k, ck}, {q + k, pt}};
  }
  return e;
}

ShiftMultiset shifts_of(const std::vector<QPFactor> &factors, const Rat &t) {
  ShiftMultiset s;
  for (const auto &f : factors)
    s = s + ShiftMultiset::quasi_particle(f.charge, t, f.shift);
  return s;
}

ExpandedVector factor_product(const std::vector<QPFactor> &factors, const Rat &t,
                              const VarSpace &space, int degree_cap) {
  const std::size_t z = space.index("z");
  ExpandedVector out = ExpandedVector::vacuum(space, degree_cap);
  for (const auto &f : factors)
    if (f.charge > 0)
      out = out * quasi_particle_series(space, degree_cap, z, f.charge, t, f.shift);
  return out;
}

ExchangeReport exchange_identity_check(int p, int q, int k, ExchangeFamily family, const Rat &t,
                                       int window) {
  if (k < 1 || k > p)
    throw std::out_of_range("exchange identity index k must lie in 1..p");
  const ExchangeIdentity e =
      exchange_identity(p, q, family == ExchangeFamily::first ? k : p + k, t);
  ExchangeReport r;
  const ShiftMultiset l = shifts_of(e.lhs, t);
  const ShiftMultiset rr = shifts_of(e.rhs, t);
  r.lhs_shifts = l.to_string();
  r.rhs_shifts = rr.to_string();
  r.multiset_equal = l == rr;
  auto empty = [](const QPFactor &f) { return f.charge == 0; };
  r.degenerate = std::any_of(e.lhs.begin(), e.lhs.end(), empty) ||
                 std::any_of(e.rhs.begin(), e.rhs.end(), empty);
  const std::size_t h_order = 3;
  const int cap = window + p + q + static_cast<int>(h_order) - 1;
  const VarSpace space = VarSpace::with_h({{"z", 0, window}}, h_order);
  r.series_equal = factor_product(e.lhs, t, space, cap) == factor_product(e.rhs, t, space, cap);
  return r;
}

AlphaSolution solve_alpha(int p, int q, int l, const Rat &t) {
  if (p < 1 || q < p || l < 1 || l > 2 * p)
    throw std::out_of_range("solve_alpha needs q >= p >= 1 and 1 <= l <= 2p");
  const auto c = relation_nodes(p, q, t);
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(l), std::vector<Rat>(l));
  std::vector<Rat> b(static_cast<std::size_t>(l), Rat(0));
  for (int k = 0; k < l; ++k)
    for (int i = 0; i < l; ++i)
      a[k][i] = power(c[i], k);
  b[l - 1] = Rat(factorial(l - 1));
  return {p, q, l, t, solve_dense(std::move(a), std::move(b))};
}

std::vector<Rat> alpha_residuals(const AlphaSolution &s) {
  const auto c = relation_nodes(s.p, s.q, s.t);
  std::vector<Rat> out;
  for (int k = 0; k < s.l; ++k) {
    Rat sum = 0;
    for (int i = 0; i < s.l; ++i)
      sum += power(c[i], k) * s.alpha[i];
    out.push_back(sum - (k == s.l - 1 ? Rat(factorial(s.l - 1)) : Rat(0)));
  }
  return out;
}

namespace {

int relation_cap(const AlphaSolution &s, std::size_t h_order, int window) {
  return window + s.p + s.q + static_cast<int>(h_order) - 1;
}

} // namespace

ExpandedVector combined_relation_lhs(const AlphaSolution &s, std::size_t h_order, int window) {
  const VarSpace space = VarSpace::with_h({{"z", 0, window}}, h_order);
  const int cap = relation_cap(s, h_order, window);
  const auto c = relation_nodes(s.p, s.q, s.t);
  ExpandedVector out(space, cap);
  for (int k = 0; k < s.l; ++k)
    out += factor_product({{s.p, c[k]}, {s.q, s.t * s.p}}, s.t, space, cap) * s.alpha[k];
  return out;
}

ExpandedVector combined_relation_rhs(const AlphaSolution &s, std::size_t h_order, int window) {
  const VarSpace space = VarSpace::with_h({{"z", 0, window}}, h_order);
  const int cap = relation_cap(s, h_order, window);
  ExpandedVector out(space, cap);
  for (int k = 0; k < s.l; ++k)
    out += factor_product(exchange_identity(s.p, s.q, k + 1, s.t).rhs, s.t, space, cap) *
           s.alpha[k];
  return out;
}

ValuationReport valuation_check(const AlphaSolution &s, std::size_t h_order, int window) {
  if (h_order < static_cast<std::size_t>(s.l))
    throw std::invalid_argument("valuation_check: h-order must exceed l - 1");
  const ExpandedVector lhs = combined_relation_lhs(s, h_order, window);
  ValuationReport r;
  r.valuation = lhs.h_valuation();
  r.conclusive = r.valuation < h_order;
  r.passed = r.conclusive && r.valuation + 1 >= static_cast<std::size_t>(s.l);
  return r;
}

DerivativeReport derivative_relation_check(const AlphaSolution &s, int window) {
  const std::size_t h_order = static_cast<std::size_t>(s.l);
  const ExpandedVector lhs = combined_relation_lhs(s, h_order, window);
  const std::size_t h = lhs.space().index("h");
  ExpandedVector low(lhs.space(), lhs.degree_cap());
  for (std::size_t b = 0; b + 1 < h_order; ++b)
    low += lhs.slice(h, static_cast<int>(b));
  const ExpandedVector top = lhs.slice(h, s.l - 1);

  // Modulo h the shifts disappear, so h-order 1 suffices on this side.
  const VarSpace mod_h = VarSpace::with_h({{"z", 0, window + s.l - 1}}, 1);
  ExpandedVector f = quasi_particle_series(mod_h, lhs.degree_cap(), 0, s.p, s.t);
  for (int i = 0; i + 1 < s.l; ++i)
    f = f.derivative(0);
  const ExpandedVector g = quasi_particle_series(mod_h, lhs.degree_cap(), 0, s.q, s.t);
  const ExpandedVector rhs = (f * g).reembed(lhs.space());

  DerivativeReport r;
  if (!low.is_zero()) {
    r.witness = "combined sum has h-powers below l-1";
    return r;
  }
  const ExpandedVector diff = top - rhs;
  r.passed = diff.is_zero();
  if (!r.passed) {
    std::ostringstream os;
    const auto &[e, coeffs] = *diff.terms().begin();
    os << "z^" << e[0] << " " << coeffs.begin()->first << ": " << coeffs.begin()->second;
    r.witness = os.str();
  }
  return r;
}

} // namespace qva
