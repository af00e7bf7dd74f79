#include "qva/series_vector.hpp"

#include <stdexcept>

namespace qva {

namespace {

void add_into(ExpandedVector::Coeffs &coeffs, const PBWMonomial &m, const Rat &c) {
  auto [it, inserted] = coeffs.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      coeffs.erase(it);
  }
}

// Index map from `from` into `to` by variable name; -1 when missing.
std::vector<long> name_map(const VarSpace &from, const VarSpace &to) {
  std::vector<long> out(from.size(), -1);
  for (std::size_t i = 0; i < from.size(); ++i)
    if (to.has(from[i].name))
      out[i] = static_cast<long>(to.index(from[i].name));
  return out;
}

bool remap(const Exponents &e, const std::vector<long> &map, std::size_t target_size,
           Exponents &out) {
  out.assign(target_size, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (map[i] < 0) {
      if (e[i] != 0)
        return false;
      continue;
    }
    out[static_cast<std::size_t>(map[i])] = e[i];
  }
  return true;
}

} // namespace

ExpandedVector::ExpandedVector(VarSpace space, int degree_cap)
    : space_(std::move(space)), degree_cap_(degree_cap) {
  if (degree_cap < 0)
    throw std::invalid_argument("ExpandedVector: negative degree cap");
}

ExpandedVector ExpandedVector::vacuum(const VarSpace &space, int degree_cap) {
  ExpandedVector v(space, degree_cap);
  v.add_term(Exponents(space.size(), 0), PBWMonomial{}, 1);
  return v;
}

ExpandedVector ExpandedVector::xplus(const VarSpace &space, int degree_cap,
                                     const LinearForm &argument) {
  ExpandedVector v(space, degree_cap);
  const ExpandedScalar w = ExpandedScalar::linear(space, argument);
  ExpandedScalar w_pow = ExpandedScalar::constant(space, 1);
  for (int r = 1; r <= degree_cap; ++r) {
    const PBWMonomial m({r});
    for (const auto &[e, c] : w_pow.terms())
      v.add_term(e, m, c);
    w_pow = w_pow * w;
  }
  return v;
}

std::size_t ExpandedVector::size() const {
  std::size_t n = 0;
  for (const auto &[e, c] : terms_)
    n += c.size();
  return n;
}

void ExpandedVector::add_term(const Exponents &e, const PBWMonomial &m, const Rat &c) {
  if (c == 0 || m.degree() > degree_cap_ || !space_.admits(e))
    return;
  auto &coeffs = terms_[e];
  add_into(coeffs, m, c);
  if (coeffs.empty())
    terms_.erase(e);
}

const ExpandedVector::Coeffs *ExpandedVector::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? nullptr : &it->second;
}

static void require_compatible(const ExpandedVector &a, const ExpandedVector &b) {
  if (!(a.space() == b.space()) || a.degree_cap() != b.degree_cap())
    throw std::invalid_argument("ExpandedVector: operands have different spaces or caps");
}

ExpandedVector &ExpandedVector::operator+=(const ExpandedVector &rhs) {
  require_compatible(*this, rhs);
  for (const auto &[e, coeffs] : rhs.terms_)
    for (const auto &[m, c] : coeffs)
      add_term(e, m, c);
  return *this;
}

ExpandedVector &ExpandedVector::operator-=(const ExpandedVector &rhs) {
  require_compatible(*this, rhs);
  for (const auto &[e, coeffs] : rhs.terms_)
    for (const auto &[m, c] : coeffs)
      add_term(e, m, -c);
  return *this;
}

ExpandedVector &ExpandedVector::operator*=(const Rat &s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, coeffs] : terms_)
    for (auto &[m, c] : coeffs)
      c *= s;
  return *this;
}

ExpandedVector operator*(const ExpandedScalar &s, const ExpandedVector &v) {
  if (!(s.space() == v.space_))
    throw std::invalid_argument("ExpandedVector: scalar lives in a different space");
  ExpandedVector out(v.space_, v.degree_cap_);
  const std::size_t n = v.space_.size();
  Exponents e(n);
  for (const auto &[es, cs] : s.terms()) {
    for (const auto &[ev, coeffs] : v.terms_) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) {
        e[i] = es[i] + ev[i];
        inside = e[i] >= v.space_[i].lo && e[i] <= v.space_[i].hi;
      }
      if (!inside)
        continue;
      auto &target = out.terms_[e];
      for (const auto &[m, c] : coeffs)
        add_into(target, m, cs * c);
      if (target.empty())
        out.terms_.erase(e);
    }
  }
  return out;
}

ExpandedVector operator*(const ExpandedVector &a, const ExpandedVector &b) {
  require_compatible(a, b);
  ExpandedVector out(a.space_, a.degree_cap_);
  const std::size_t n = a.space_.size();
  Exponents e(n);
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) {
        e[i] = ea[i] + eb[i];
        inside = e[i] >= a.space_[i].lo && e[i] <= a.space_[i].hi;
      }
      if (!inside)
        continue;
      auto &target = out.terms_[e];
      for (const auto &[ma, xa] : ca)
        for (const auto &[mb, xb] : cb)
          if (ma.degree() + mb.degree() <= a.degree_cap_)
            add_into(target, ma * mb, xa * xb);
      if (target.empty())
        out.terms_.erase(e);
    }
  }
  return out;
}

bool operator==(const ExpandedVector &a, const ExpandedVector &b) {
  require_compatible(a, b);
  return a.terms_ == b.terms_;
}

ExpandedVector ExpandedVector::derivative(std::size_t var) const {
  ExpandedVector out(space_, degree_cap_);
  for (const auto &[e, coeffs] : terms_) {
    if (e.at(var) == 0)
      continue;
    Exponents f = e;
    f[var] -= 1;
    for (const auto &[m, c] : coeffs)
      out.add_term(f, m, c * e[var]);
  }
  return out;
}

ExpandedVector ExpandedVector::slice(std::size_t var, int power) const {
  ExpandedVector out(space_, degree_cap_);
  for (const auto &[e, coeffs] : terms_) {
    if (e.at(var) != power)
      continue;
    Exponents f = e;
    f[var] = 0;
    for (const auto &[m, c] : coeffs)
      out.add_term(f, m, c);
  }
  return out;
}

std::size_t ExpandedVector::h_valuation() const {
  const std::size_t h = space_.index("h");
  std::size_t best = space_.h_order();
  for (const auto &[e, coeffs] : terms_)
    if (!coeffs.empty())
      best = std::min(best, static_cast<std::size_t>(e[h]));
  return best;
}

WElement ExpandedVector::at(const Exponents &exps) const {
  const std::size_t h = space_.index("h");
  const std::size_t order = space_.h_order();
  WElement out(degree_cap_, order);
  Exponents e = exps;
  if (e.size() + 1 == space_.size())
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(h), 0);
  else if (e.size() != space_.size())
    throw std::invalid_argument("exponent vector does not match the variable space");
  for (std::size_t k = 0; k < order; ++k) {
    e[h] = static_cast<int>(k);
    if (const Coeffs *coeffs = coefficient(e))
      for (const auto &[m, c] : *coeffs)
        out.add_scalar(m, k, c);
  }
  return out;
}

ExpandedVector ExpandedVector::reembed(const VarSpace &target) const {
  const auto map = name_map(space_, target);
  ExpandedVector out(target, degree_cap_);
  Exponents f;
  for (const auto &[e, coeffs] : terms_) {
    if (!remap(e, map, target.size(), f))
      continue;
    for (const auto &[m, c] : coeffs)
      out.add_term(f, m, c);
  }
  return out;
}

ExpandedVector multiply_into(const ExpandedScalar &s, const ExpandedVector &v,
                             const VarSpace &target) {
  const std::size_t n = target.size();
  auto same_names = [&](const VarSpace &sp) {
    if (sp.size() != n)
      return false;
    for (std::size_t i = 0; i < n; ++i)
      if (sp[i].name != target[i].name)
        return false;
    return true;
  };
  if (!same_names(s.space()) || !same_names(v.space()))
    throw std::invalid_argument("multiply_into: variable lists differ");
  ExpandedVector out(target, v.degree_cap());
  Exponents e(n);
  for (const auto &[es, cs] : s.terms()) {
    for (const auto &[ev, coeffs] : v.terms()) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) {
        e[i] = es[i] + ev[i];
        inside = e[i] >= target[i].lo && e[i] <= target[i].hi;
      }
      if (!inside)
        continue;
      for (const auto &[m, c] : coeffs)
        out.add_term(e, m, cs * c);
    }
  }
  return out;
}

ExpandedScalar reembed(const ExpandedScalar &s, const VarSpace &target) {
  const auto map = name_map(s.space(), target);
  ExpandedScalar out(target);
  Exponents f;
  for (const auto &[e, c] : s.terms())
    if (remap(e, map, target.size(), f))
      out.add_term(f, c);
  return out;
}

std::ostream &operator<<(std::ostream &os, const ExpandedVector &v) {
  if (v.is_zero())
    return os << "0";
  bool first = true;
  for (const auto &[e, coeffs] : v.terms()) {
    for (const auto &[m, c] : coeffs) {
      if (!first)
        os << " + ";
      first = false;
      os << c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
          os << "*" << v.space()[i].name << "^" << e[i];
      os << "*" << m;
    }
  }
  return os;
}

} // namespace qva
