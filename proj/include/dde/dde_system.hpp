#pragma once

#include <string>
#include <vector>

#include "dde/multipoly.hpp"
#include "dde/upoly.hpp"

namespace dde {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

// A system of discrete differential equations in fixed-point shape,
//   F_i = f_i(u) + t * Q_i(F_1, D F_1, ..., D^k F_n, t, u),
// with D the discrete derivative at the catalytic point a. The Q_i live on
// a table [y_1 .. y_{n(k+1)}, t, u] (plus eps for deformed systems), where
// y_{(i-1)(k+1)+l+1} stands for D^l F_i.
struct DdeSystem {
  int n = 0;
  int k = 1;
  Rational a;
  VarTablePtr qtable;
  std::vector<UPoly> f;
  std::vector<MultiPoly> q;
  bool has_eps = false;
  Rational shifted_by;  // original catalytic point when this system was shifted to 0

  size_t y_index(int i, int ell) const;  // 1-based equation index, 0 <= ell <= k
  size_t t_index() const { return qtable->index_of("t"); }
  size_t u_index() const { return qtable->index_of("u"); }
  size_t eps_index() const { return qtable->index_of("eps"); }

  // deg bound delta of Thm 2 / Prop 12: degrees counted in u and the series
  // arguments, not in t (nor eps).
  long delta() const;

  bool q_all_zero() const;
};

// Parses the input DSL:
//   catalytic u at <rational>
//   [order <int>]
//   F1 = <expr>
//   ...
// Expressions are polynomials over rationals, t, u, F1..Fn and Dj[Fi], with
// + - * ^ and parentheses. Enforces the fixed-point shape (every term that
// touches an F carries a factor t) and D-order <= k.
DdeSystem parse_dde(const std::string& text);

// Equivalent system with u replaced by u + a, so the catalytic point becomes
// 0; records the inverse shift. Applying it to an a=0 system is the identity.
DdeSystem shift_catalytic_point(const DdeSystem& sys);

}  // namespace dde
