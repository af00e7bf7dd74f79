#include "qva/g_series.hpp"

#include <stdexcept>

namespace qva {

HSeries g_series(std::size_t order) {
  if (order == 0)
    throw std::invalid_argument("g_series: order must be positive");
  HSeries g(order);
  g[0] = 1;
  for (std::size_t n = 2; n <= order; ++n) {
    // 2(n-1) g_{n-1} = g_{n-2} + sum_{k<n-1} g_k C(-k, n-k) 2^{n-k}
    Rat acc = g[n - 2];
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (g[k] == 0)
        continue;
      const long diff = static_cast<long>(n - k);
      acc += g[k] * Rat(binomial(-static_cast<long>(k), diff)) * power(Rat(2), diff);
    }
    g[n - 1] = acc / Rat(2 * static_cast<long>(n - 1));
  }
  return g;
}

HSeries g_functional_residual(const HSeries &g) {
  const std::size_t n = g.order();
  HSeries one_minus_x2 = HSeries::one(n) - HSeries::monomial(n, 2, 1);
  return compose_shift(g, 2) - g * one_minus_x2;
}

HSeries g_inversion_residual(const HSeries &g) {
  // h/(-u + 2h) = -x (1 - 2x)^{-1}: flip the sign, then shift by -2h.
  const HSeries shifted = compose_shift(negate_argument(g), -2);
  return g * shifted - HSeries::one(g.order());
}

} // namespace qva
