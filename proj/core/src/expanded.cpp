#include "qva/expanded.hpp"

#include <stdexcept>

namespace qva {

VarSpace::VarSpace(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].lo > 0 || vars_[i].hi < 0)
      throw std::invalid_argument("exponent window for " + vars_[i].name + " must contain 0");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[j].name == vars_[i].name)
        throw std::invalid_argument("duplicate variable " + vars_[i].name);
  }
}

VarSpace VarSpace::with_h(std::vector<Variable> vars, std::size_t h_order) {
  if (h_order == 0)
    throw std::invalid_argument("h-order must be positive");
  vars.push_back({"h", 0, static_cast<int>(h_order) - 1});
  return VarSpace(std::move(vars));
}

std::size_t VarSpace::index(const std::string &name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name)
      return i;
  throw std::out_of_range("no variable named " + name);
}

bool VarSpace::has(const std::string &name) const {
  for (const auto &v : vars_)
    if (v.name == name)
      return true;
  return false;
}

std::size_t VarSpace::h_order() const {
  for (const auto &v : vars_)
    if (v.name == "h")
      return static_cast<std::size_t>(v.hi + 1);
  return 0;
}

bool VarSpace::admits(const Exponents &e) const {
  if (e.size() != vars_.size())
    return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < vars_[i].lo || e[i] > vars_[i].hi)
      return false;
  return true;
}

ExpandedScalar::ExpandedScalar(VarSpace space) : space_(std::move(space)) {}

ExpandedScalar ExpandedScalar::constant(const VarSpace &space, const Rat &c) {
  return monomial(space, Exponents(space.size(), 0), c);
}

ExpandedScalar ExpandedScalar::monomial(const VarSpace &space, const Exponents &e, const Rat &c) {
  ExpandedScalar s(space);
  s.add_term(e, c);
  return s;
}

ExpandedScalar ExpandedScalar::linear(const VarSpace &space, const LinearForm &form,
                                      const Rat &c0) {
  ExpandedScalar s = constant(space, c0);
  for (const auto &[var, coeff] : form) {
    Exponents e(space.size(), 0);
    e.at(var) = 1;
    s.add_term(e, coeff);
  }
  return s;
}

Rat ExpandedScalar::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ExpandedScalar::add_term(const Exponents &e, const Rat &c) {
  if (c == 0 || !space_.admits(e))
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

static void require_same_space(const VarSpace &a, const VarSpace &b) {
  if (!(a == b))
    throw std::invalid_argument("ExpandedScalar: operands live in different variable spaces");
}

ExpandedScalar &ExpandedScalar::operator+=(const ExpandedScalar &rhs) {
  require_same_space(space_, rhs.space_);
  for (const auto &[e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

ExpandedScalar &ExpandedScalar::operator-=(const ExpandedScalar &rhs) {
  require_same_space(space_, rhs.space_);
  for (const auto &[e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

ExpandedScalar &ExpandedScalar::operator*=(const Rat &s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_)
    c *= s;
  return *this;
}

ExpandedScalar operator*(const ExpandedScalar &a, const ExpandedScalar &b) {
  require_same_space(a.space_, b.space_);
  ExpandedScalar out(a.space_);
  const std::size_t n = a.space_.size();
  Exponents e(n);
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] < a.space_[i].lo || e[i] > a.space_[i].hi) {
          inside = false;
          break;
        }
      }
      if (inside)
        out.add_term(e, ca * cb);
    }
  }
  return out;
}

ExpandedScalar ExpandedScalar::operator-() const {
  ExpandedScalar out = *this;
  for (auto &[e, c] : out.terms_)
    c = -c;
  return out;
}

bool operator==(const ExpandedScalar &a, const ExpandedScalar &b) {
  require_same_space(a.space_, b.space_);
  return a.terms_ == b.terms_;
}

ExpandedScalar ExpandedScalar::pow(unsigned e) const {
  ExpandedScalar out = constant(space_, 1);
  for (unsigned i = 0; i < e; ++i)
    out = out * *this;
  return out;
}

ExpandedScalar ExpandedScalar::slice(std::size_t var, int power) const {
  ExpandedScalar out(space_);
  for (const auto &[e, c] : terms_) {
    if (e.at(var) != power)
      continue;
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

ExpandedScalar ExpandedScalar::recast(const VarSpace &space) const {
  if (space.size() != space_.size())
    throw std::invalid_argument("recast: variable count differs");
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space[i].name != space_[i].name)
      throw std::invalid_argument("recast: variable names differ");
  ExpandedScalar out(space);
  for (const auto &[e, c] : terms_)
    out.add_term(e, c);
  return out;
}

std::ostream &operator<<(std::ostream &os, const ExpandedScalar &s) {
  if (s.is_zero())
    return os << "0";
  bool first = true;
  for (const auto &[e, c] : s.terms()) {
    if (!first)
      os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        os << "*" << s.space()[i].name << "^" << e[i];
  }
  return os;
}

ExpandedScalar expand_neg_power(const VarSpace &space, std::size_t left, const LinearForm &rest,
                                int r) {
  for (const auto &[var, coeff] : rest)
    if (var == left)
      throw std::invalid_argument("expand_neg_power: left variable repeated in the rest");
  ExpandedScalar out(space);
  const ExpandedScalar rest_poly = ExpandedScalar::linear(space, rest);
  ExpandedScalar rest_pow = ExpandedScalar::constant(space, 1);
  const Variable &lv = space[left];
  for (long l = 0;; ++l) {
    const long left_exp = -static_cast<long>(r) - l;
    if (left_exp < lv.lo)
      break;
    if (r <= 0 && l > -r)
      break;
    if (rest_pow.is_zero())
      break;
    const Rat binom(binomial(-static_cast<long>(r), l));
    if (left_exp <= lv.hi) {
      for (const auto &[e, c] : rest_pow.terms()) {
        Exponents f = e;
        f[left] += static_cast<int>(left_exp);
        out.add_term(f, binom * c);
      }
    }
    rest_pow = rest_pow * rest_poly;
  }
  return out;
}

ExpandedScalar expand_neg_power(const VarSpace &space, std::size_t left, std::size_t right, int r) {
  return expand_neg_power(space, left, LinearForm{{right, Rat(1)}}, r);
}

ExpandedScalar substitute_inverse_series(const VarSpace &space, const HSeries &f, std::size_t left,
                                         int sign, const LinearForm &rest) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("substitute_inverse_series: sign must be +1 or -1");
  const std::size_t h = space.index("h");
  LinearForm flipped = rest;
  if (sign == -1)
    for (auto &[var, coeff] : flipped)
      coeff = -coeff;
  ExpandedScalar out(space);
  for (std::size_t b = 0; b < f.order() && static_cast<int>(b) <= space[h].hi; ++b) {
    if (f[b] == 0)
      continue;
    Rat scale = f[b];
    if (sign == -1 && b % 2 == 1)
      scale = -scale;
    const ExpandedScalar expansion = expand_neg_power(space, left, flipped, static_cast<int>(b));
    for (const auto &[e, c] : expansion.terms()) {
      Exponents g = e;
      g[h] += static_cast<int>(b);
      out.add_term(g, scale * c);
    }
  }
  return out;
}

} // namespace qva
