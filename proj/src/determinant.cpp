#include "dde/determinant.hpp"

#include "dde/division.hpp"

namespace dde {

namespace {

MultiPoly det_small(const std::vector<std::vector<MultiPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  // 3x3: expansion along the first row.
  MultiPoly d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  d = d - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  d = d + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return d;
}

MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m) {
  size_t n = m.size();
  const auto table = m[0][0].table();
  const auto order = m[0][0].order();
  MultiPoly prev = MultiPoly::constant(table, Rational(1), order);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return MultiPoly::zero(table, order);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        if (num.is_zero()) {
          m[i][j] = num;
          continue;
        }
        auto q = exact_divide(num, prev);
        if (!q) throw StructuralError("determinant: Bareiss division failed");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly::zero(table, order);
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
  size_t n = m.size();
  if (n == 0) throw StructuralError("determinant: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw StructuralError("determinant: matrix not square");
  if (n <= 3) return det_small(m);
  return det_bareiss(m);
}

MultiPoly jacobian_determinant(const std::vector<MultiPoly>& polys, const std::vector<size_t>& vars) {
  if (polys.empty() || polys.size() != vars.size())
    throw StructuralError("jacobian_determinant: non-square configuration");
  std::vector<std::vector<MultiPoly>> m(polys.size());
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = 0; j < vars.size(); ++j) m[i].push_back(polys[i].derivative(vars[j]));
  return determinant(m);
}

MultiPoly bordered_determinant(const std::vector<MultiPoly>& polys, const std::vector<size_t>& vars, size_t u_var) {
  if (polys.empty() || polys.size() != vars.size())
    throw StructuralError("bordered_determinant: non-square configuration");
  std::vector<std::vector<MultiPoly>> m(polys.size());
  for (size_t i = 0; i < polys.size(); ++i) {
    for (size_t j = 0; j + 1 < vars.size(); ++j) m[i].push_back(polys[i].derivative(vars[j]));
    m[i].push_back(polys[i].derivative(u_var));
  }
  return determinant(m);
}

}  // namespace dde
