#pragma once

#include <vector>

#include "dde/multipoly.hpp"

namespace dde {

// Resultant of p and q with respect to `var` (subresultant PRS). The result
// is free of `var` and lies in the ideal generated by p and q. Errors if
// both inputs have degree 0 in `var`; zero inputs are rejected.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, size_t var);

// Gcd of two polynomials in at most two effective variables, by evaluation
// of one variable at rational points, univariate gcds and interpolation,
// certified by exact trial division.
MultiPoly gcd_bivariate(const MultiPoly& p, const MultiPoly& q);

// Product of the distinct irreducible factors of p (normalized). p must have
// at most two effective variables.
MultiPoly squarefree_part(const MultiPoly& p);

}  // namespace dde
