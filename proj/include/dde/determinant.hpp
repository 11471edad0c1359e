#pragma once

#include <vector>

#include "dde/multipoly.hpp"

namespace dde {

// Exact determinant of a square polynomial matrix: cofactor expansion up to
// 3x3, fraction-free Bareiss elimination beyond.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

// det (d polys[i] / d vars[j]); requires a square configuration.
MultiPoly jacobian_determinant(const std::vector<MultiPoly>& polys, const std::vector<size_t>& vars);

// Same matrix with the last column replaced by d polys[i] / d u_var; the
// bordered determinant P of the kernel construction.
MultiPoly bordered_determinant(const std::vector<MultiPoly>& polys, const std::vector<size_t>& vars, size_t u_var);

}  // namespace dde
