#pragma once

#include <optional>
#include <vector>

#include "dde/multipoly.hpp"

namespace dde {

// Remainder of multivariate division of p by the divisor list: no monomial of
// the result is divisible by any divisor's leading monomial, and p - r lies
// in the ideal generated by the divisors. Polynomials must share table and
// order; zero divisors are rejected.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& divisors);
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& divisors, const MonomialOrder& order);

// Exact quotient p/d, or nullopt if d does not divide p.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d);

// Strips every factor of d from p; returns {reduced, multiplicity}.
std::pair<MultiPoly, int> divide_out_all(MultiPoly p, const MultiPoly& d);

// p viewed as a univariate polynomial in `var` with MultiPoly coefficients
// (dense, ascending). Coefficients are free of `var`.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, size_t var);
MultiPoly from_coeffs_in(const std::vector<MultiPoly>& coeffs, size_t var);

// Content of p with respect to `var`: the univariate-in-var gcd of the
// coefficients of p viewed as a polynomial in the remaining variables.
// Result is a polynomial in `var` alone (normalized); p is exactly divisible
// by it.
MultiPoly content_in(const MultiPoly& p, size_t var);

}  // namespace dde
