#include "qva/pbw.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qva {

PBWMonomial::PBWMonomial(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1)
      throw std::invalid_argument("PBWMonomial: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

PBWMonomial PBWMonomial::from_modes(const std::vector<int> &modes) {
  std::vector<int> parts;
  parts.reserve(modes.size());
  for (int r : modes) {
    if (r > -1)
      throw std::invalid_argument("PBWMonomial: modes must be <= -1");
    parts.push_back(-r);
  }
  return PBWMonomial(std::move(parts));
}

std::vector<int> PBWMonomial::modes() const {
  std::vector<int> out;
  out.reserve(parts_.size());
  for (int p : parts_)
    out.push_back(-p);
  return out;
}

PBWMonomial operator*(const PBWMonomial &a, const PBWMonomial &b) {
  PBWMonomial out;
  out.parts_.resize(a.parts_.size() + b.parts_.size());
  std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
             out.parts_.begin(), std::greater<>());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::string PBWMonomial::to_string() const {
  if (parts_.empty())
    return "1";
  std::string s;
  for (int p : parts_)
    s += "x(-" + std::to_string(p) + ")";
  return s;
}

std::ostream &operator<<(std::ostream &os, const PBWMonomial &m) { return os << m.to_string(); }

std::vector<PBWMonomial> pbw_monomials(int degree) {
  std::vector<PBWMonomial> out;
  if (degree < 0)
    return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(degree, degree);
  std::sort(out.begin(), out.end());
  return out;
}

WElement::WElement(int degree_cap, std::size_t h_order)
    : degree_cap_(degree_cap), h_order_(h_order) {
  if (degree_cap < 0)
    throw std::invalid_argument("WElement: negative degree cap");
  if (h_order == 0)
    throw std::invalid_argument("WElement: h-order must be positive");
}

WElement WElement::vacuum(int degree_cap, std::size_t h_order) {
  WElement w(degree_cap, h_order);
  w.add(PBWMonomial{}, HSeries::one(h_order));
  return w;
}

WElement WElement::generator(int r, int degree_cap, std::size_t h_order) {
  WElement w(degree_cap, h_order);
  w.add(PBWMonomial({r}), HSeries::one(h_order));
  return w;
}

WElement WElement::monomial(const PBWMonomial &m, const HSeries &coeff, int degree_cap) {
  WElement w(degree_cap, coeff.order());
  w.add(m, coeff);
  return w;
}

HSeries WElement::coefficient(const PBWMonomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? HSeries(h_order_) : it->second;
}

void WElement::add(const PBWMonomial &m, const HSeries &c) {
  if (c.order() != h_order_)
    throw std::invalid_argument("WElement: mismatched h-order");
  if (c.is_zero())
    return;
  if (m.degree() > degree_cap_)
    throw std::out_of_range("WElement: monomial " + m.to_string() + " exceeds degree cap " +
                            std::to_string(degree_cap_));
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void WElement::add_truncating(const PBWMonomial &m, const HSeries &c) {
  if (m.degree() <= degree_cap_)
    add(m, c);
}

void WElement::add_scalar(const PBWMonomial &m, std::size_t h_power, const Rat &c) {
  if (h_power >= h_order_ || c == 0)
    return;
  add(m, HSeries::monomial(h_order_, h_power, c));
}

static void require_same_caps(const WElement &a, const WElement &b) {
  if (a.degree_cap() != b.degree_cap() || a.h_order() != b.h_order())
    throw std::invalid_argument("WElement: operands have different caps");
}

WElement &WElement::operator+=(const WElement &rhs) {
  require_same_caps(*this, rhs);
  for (const auto &[m, c] : rhs.terms_)
    add(m, c);
  return *this;
}

WElement &WElement::operator-=(const WElement &rhs) {
  require_same_caps(*this, rhs);
  for (const auto &[m, c] : rhs.terms_)
    add(m, -c);
  return *this;
}

WElement &WElement::operator*=(const Rat &s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= s;
  return *this;
}

WElement &WElement::operator*=(const HSeries &s) {
  std::map<PBWMonomial, HSeries> next;
  for (auto &[m, c] : terms_) {
    HSeries p = c * s;
    if (!p.is_zero())
      next.emplace(m, std::move(p));
  }
  terms_ = std::move(next);
  return *this;
}

WElement operator*(const WElement &a, const WElement &b) {
  require_same_caps(a, b);
  WElement out(a.degree_cap_, a.h_order_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      if (ma.degree() + mb.degree() <= a.degree_cap_)
        out.add(ma * mb, ca * cb);
  return out;
}

bool operator==(const WElement &a, const WElement &b) {
  require_same_caps(a, b);
  return a.terms_ == b.terms_;
}

WElement WElement::h_coefficient(std::size_t power) const {
  WElement out(degree_cap_, 1);
  if (power >= h_order_)
    return out;
  for (const auto &[m, c] : terms_)
    out.add_scalar(m, 0, c[power]);
  return out;
}

WElement WElement::degree_part(int d) const {
  WElement out(degree_cap_, h_order_);
  for (const auto &[m, c] : terms_)
    if (m.degree() == d)
      out.add(m, c);
  return out;
}

std::string WElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c << ")*" << m;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const WElement &w) { return os << w.to_string(); }

WElement classical_limit(const WElement &w) { return w.h_coefficient(0); }

} // namespace qva
