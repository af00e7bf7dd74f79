#include "qva/rational.hpp"

#include <stdexcept>

namespace qva {

Rat parse_rat(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty())
      return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || (den[0] == '-' || den[0] == '+'))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Int n{std::string(num[0] == '+' ? num.substr(1) : num)};
  Int d{std::string(den)};
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat &r) { return r.get_str(); }

Int binomial(long top, long k) {
  if (k < 0)
    return 0;
  Int out;
  if (top >= 0) {
    if (k > top)
      return 0;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(k));
    return out;
  }
  // C(-r, k) = (-1)^k C(r+k-1, k)
  const long r = -top;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r + k - 1),
               static_cast<unsigned long>(k));
  return (k % 2 == 0) ? out : Int(-out);
}

Int factorial(long n) {
  if (n < 0)
    throw std::invalid_argument("factorial of a negative number");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rat power(const Rat &base, long exp) {
  if (exp == 0)
    return 1;
  if (exp < 0) {
    if (base == 0)
      throw std::domain_error("zero to a negative power");
    return Rat(1) / power(base, -exp);
  }
  Rat out(1);
  Rat b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e) {
    if (e & 1u)
      out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

} // namespace qva
