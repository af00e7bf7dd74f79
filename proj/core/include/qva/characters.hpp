#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qva/rational.hpp"

namespace qva {

/// Truncated q-series c_0 + c_1 q + ... + c_D q^D with integer coefficients.
struct QSeries {
  std::vector<long long> coeffs;
  std::string tag;
};

/// Number of PBW monomials of each degree, i.e. p(d).
QSeries character_principal(int max_degree);

/// Number of basis quasi-particle monomials of each degree, optionally with
/// charges <= max_charge. The count does not depend on t.
QSeries character_qp_basis(int max_degree, const Rat &t, std::optional<int> max_charge);

/// Graded dimension of the level-k quotient, from exact ranks of the t = 0
/// ideal. Degrees are processed in parallel when worker_threads() > 1.
QSeries character_quotient(int level, int max_degree);

/// Value of QVA_THREADS when it is a positive integer, otherwise 1.
unsigned worker_threads();

} // namespace qva
