#pragma once

#include <cstddef>

#include "qva/hseries.hpp"

namespace qva {

/// The unique series g(u) in 1 + (h/u)Q[[h/u]] with g(u + 2h) = g(u)(1 - h^2 u^{-2}),
/// returned as a series in x = h/u truncated at x^{order-1}.
///
/// Substituting u -> u + 2h turns x into x(1 + 2x)^{-1}; comparing the x^n
/// coefficients on both sides, g_n cancels and the equation fixes g_{n-1}.
HSeries g_series(std::size_t order);

/// g(u + 2h) - g(u)(1 - h^2/u^2) in the x-variable, truncated at the order of g.
HSeries g_functional_residual(const HSeries &g);

/// g(u) g(-u + 2h) - 1 in the x-variable, truncated at the order of g.
HSeries g_inversion_residual(const HSeries &g);

} // namespace qva
