#include "qva/hseries.hpp"

#include <stdexcept>

namespace qva {

HSeries::HSeries(std::size_t order) : coeffs_(order) {
  if (order == 0)
    throw std::invalid_argument("HSeries truncation order must be positive");
}

HSeries::HSeries(std::size_t order, std::initializer_list<Rat> leading) : HSeries(order) {
  std::size_t i = 0;
  for (const auto &c : leading) {
    if (i >= order)
      break;
    coeffs_[i++] = c;
  }
}

HSeries HSeries::monomial(std::size_t order, std::size_t power, const Rat &coeff) {
  HSeries s(order);
  if (power < order)
    s.coeffs_[power] = coeff;
  return s;
}

bool HSeries::is_zero() const { return valuation() == order(); }

std::size_t HSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      return i;
  return coeffs_.size();
}

HSeries &HSeries::operator+=(const HSeries &rhs) {
  if (rhs.order() != order())
    throw std::invalid_argument("HSeries: mismatched truncation orders");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

HSeries &HSeries::operator-=(const HSeries &rhs) {
  if (rhs.order() != order())
    throw std::invalid_argument("HSeries: mismatched truncation orders");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

HSeries &HSeries::operator*=(const Rat &s) {
  for (auto &c : coeffs_)
    c *= s;
  return *this;
}

HSeries operator*(const HSeries &a, const HSeries &b) {
  if (a.order() != b.order())
    throw std::invalid_argument("HSeries: mismatched truncation orders");
  const std::size_t n = a.order();
  HSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b.coeffs_[j] != 0)
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

HSeries HSeries::operator-() const {
  HSeries out = *this;
  for (auto &c : out.coeffs_)
    c = -c;
  return out;
}

HSeries HSeries::truncated(std::size_t order) const {
  HSeries out(order);
  for (std::size_t i = 0; i < order && i < coeffs_.size(); ++i)
    out.coeffs_[i] = coeffs_[i];
  return out;
}

std::ostream &operator<<(std::ostream &os, const HSeries &s) {
  bool first = true;
  for (std::size_t i = 0; i < s.order(); ++i) {
    if (s[i] == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    os << s[i];
    if (i > 0)
      os << "*h^" << i;
  }
  if (first)
    os << "0";
  return os << " + O(h^" << s.order() << ")";
}

HSeries reciprocal(const HSeries &f) {
  if (f[0] == 0)
    throw std::domain_error("reciprocal of a series with zero constant term");
  const std::size_t n = f.order();
  HSeries g(n);
  g[0] = Rat(1) / f[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      acc += f[j] * g[k - j];
    g[k] = -acc / f[0];
  }
  return g;
}

HSeries negate_argument(const HSeries &f) {
  HSeries out = f;
  for (std::size_t i = 1; i < out.order(); i += 2)
    out[i] = -out[i];
  return out;
}

HSeries compose_shift(const HSeries &f, const Rat &a) {
  // sum_k f_k x^k (1 + a x)^{-k}, with (1 + a x)^{-k} = sum_j C(-k, j) a^j x^j
  const std::size_t n = f.order();
  HSeries out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (f[k] == 0)
      continue;
    Rat apow = 1;
    for (std::size_t j = 0; k + j < n; ++j) {
      out[k + j] += f[k] * Rat(binomial(-static_cast<long>(k), static_cast<long>(j))) * apow;
      apow *= a;
    }
  }
  return out;
}

} // namespace qva

namespace qva {

HSeries transform_argument(const HSeries &f, int sign, const Rat &shift) {
  if (sign == 1)
    return compose_shift(f, shift);
  if (sign == -1)
    // h/(-w + a h) = -x (1 - a x)^{-1}
    return compose_shift(negate_argument(f), -shift);
  throw std::invalid_argument("transform_argument: sign must be +1 or -1");
}

} // namespace qva
