#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qva {

/// Exact rational number. Always kept in canonical form (reduced, positive
/// denominator); use make_rat() or canonicalize() after raw construction.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat &r);

/// Generalised binomial coefficient C(top, k) for any integer top and k >= 0.
/// C(-r, k) = (-1)^k C(r+k-1, k).
Int binomial(long top, long k);

Int factorial(long n);

/// base^exp with the convention 0^0 = 1.
Rat power(const Rat &base, long exp);

} // namespace qva
