#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dde/numbers.hpp"
#include "dde/order.hpp"
#include "dde/vartable.hpp"

namespace dde {

// Exact multivariate polynomial over the rationals. Terms are kept strictly
// sorted (descending) under the active monomial order with no zero
// coefficients, so equal polynomials have identical term lists.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  MultiPoly() = default;
  static MultiPoly zero(VarTablePtr table);
  static MultiPoly zero(VarTablePtr table, MonomialOrder order);
  static MultiPoly constant(VarTablePtr table, Rational c);
  static MultiPoly constant(VarTablePtr table, Rational c, MonomialOrder order);
  static MultiPoly variable(VarTablePtr table, size_t var, Exponent e = 1);
  static MultiPoly variable(VarTablePtr table, size_t var, Exponent e, MonomialOrder order);
  static MultiPoly monomial(VarTablePtr table, Monomial m, Rational c);
  static MultiPoly monomial(VarTablePtr table, Monomial m, Rational c, MonomialOrder order);
  // Terms in any order, possibly with repeats; combined and canonicalized.
  static MultiPoly from_terms(VarTablePtr table, std::vector<Term> terms, MonomialOrder order);

  const VarTablePtr& table() const { return table_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && monomial_is_one(terms_[0].mono)); }
  size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;
  Rational constant_coeff() const;  // coefficient of the monomial 1
  Rational coeff_of(const Monomial& m) const;

  Exponent total_deg() const;
  Exponent degree_in(size_t var) const;
  bool involves(size_t var) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(Exponent e) const;

  MultiPoly scaled(const Rational& c) const;
  MultiPoly mul_monomial(const Monomial& m, const Rational& c) const;
  // a*this + b*(m*g): the fused update used by division and Buchberger.
  static MultiPoly linear_combine(const Rational& a, const MultiPoly& p, const Rational& b, const Monomial& m,
                                  const MultiPoly& g);

  MultiPoly derivative(size_t var) const;

  // Simultaneous substitution var -> poly. All target polynomials share a
  // table/order; unbound variables map to their namesakes in the target.
  MultiPoly substitute(const std::map<size_t, MultiPoly>& bindings, VarTablePtr target,
                       const MonomialOrder& target_order) const;
  MultiPoly substitute(const std::map<size_t, MultiPoly>& bindings) const;

  // Same polynomial re-sorted under another order (same table).
  MultiPoly with_order(MonomialOrder order) const;
  // Transport onto another table by variable name; fails if a used variable
  // is missing from the target.
  MultiPoly on_table(VarTablePtr target) const;
  MultiPoly on_table(VarTablePtr target, MonomialOrder order) const;

  // Associate with integer coefficients, content 1 and positive leading
  // coefficient; the canonical representative used for goldens and ideals.
  MultiPoly normalized() const;
  // The scalar c such that normalized() == scaled(1/c) ... i.e. *this == normalized().scaled(c).
  Rational content() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Canonical text form, e.g. "64*t^3*z0^3 + 48*t^3*z0^2 - 72*t^2*z0^2".
  std::string str() const;

  void check_compatible(const MultiPoly& o, const char* op) const;

 private:
  MultiPoly(VarTablePtr table, MonomialOrder order, std::vector<Term> sorted_terms)
      : table_(std::move(table)), order_(std::move(order)), terms_(std::move(sorted_terms)) {}

  VarTablePtr table_;
  MonomialOrder order_ = MonomialOrder::degrevlex(0);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Parses the canonical text form over the given table (default order).
// Accepts integer or p/q coefficients, '^' powers, explicit '*'.
MultiPoly parse_poly(const std::string& text, VarTablePtr table);
MultiPoly parse_poly(const std::string& text, VarTablePtr table, MonomialOrder order);

}  // namespace dde
