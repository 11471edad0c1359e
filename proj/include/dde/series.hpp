#pragma once

#include <map>
#include <string>
#include <vector>

#include "dde/dde_system.hpp"
#include "dde/multipoly.hpp"
#include "dde/upoly.hpp"

namespace dde {

class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Univariate truncated power series in t over Q: exactly N stored
// coefficients c_0..c_{N-1}.
class TSeries {
 public:
  TSeries() = default;
  explicit TSeries(size_t N) : c_(N, Rational(0)) {}
  static TSeries constant(const Rational& c, size_t N);
  static TSeries t(size_t N);

  size_t order() const { return c_.size(); }
  const Rational& operator[](size_t i) const { return c_.at(i); }
  Rational& at(size_t i) { return c_.at(i); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  // First order with a nonzero coefficient, or order() when none.
  size_t valuation() const;

  TSeries truncated(size_t N) const;
  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  TSeries scaled(const Rational& c) const;

  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rational> c_;
};

// Element of Q[u][[t]] truncated at t^N: coefficient j is a polynomial in u.
class USeries {
 public:
  USeries() = default;
  explicit USeries(size_t N) : c_(N) {}
  static USeries of_upoly(const UPoly& p, size_t N);       // constant in t
  static USeries constant(const Rational& c, size_t N);
  static USeries u(size_t N);
  static USeries t(size_t N);
  static USeries of_tseries(const TSeries& s);

  size_t order() const { return c_.size(); }
  const UPoly& coeff(size_t j) const { return c_.at(j); }
  UPoly& coeff_mut(size_t j) { return c_.at(j); }

  bool is_zero() const;
  size_t valuation() const;
  long max_u_degree() const;

  USeries truncated(size_t N) const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  USeries scaled(const Rational& c) const;
  USeries shifted_t(size_t k) const;  // * t^k, keeping the truncation order

  // Discrete derivative Delta_a: coefficientwise (c(u) - c(a)) / (u - a).
  USeries delta(const Rational& a) const;
  USeries derivative_u() const;
  TSeries eval_u(const Rational& a) const;

  std::string str(const std::string& tvar = "t", const std::string& uvar = "u") const;

 private:
  std::vector<UPoly> c_;
};

// The series D^l F_i(t, a) arranged as z_{(i-1)k+l}; the values behind the
// z-variables of the polynomial systems.
struct SpecializationVector {
  int n = 0;
  int k = 0;
  std::vector<TSeries> z;  // size n*k

  const TSeries& of(int i, int ell) const { return z.at(static_cast<size_t>((i - 1) * k + ell)); }
};

// l-th u-derivative of F evaluated at u = a, truncated like F.
TSeries specialize(const USeries& F, const Rational& a, int ell);

// Exact evaluation of P with every variable bound to a series; the variable
// named t (index t_var) binds to the series t itself. Unbound variables are
// a structural error.
USeries eval_poly_at_series(const MultiPoly& P, const std::map<size_t, USeries>& bindings, size_t t_var, size_t N);

// The unique solution of the system truncated at t^N, found coefficient by
// coefficient in t, together with all specializations at the catalytic point.
std::pair<std::vector<USeries>, SpecializationVector> fixed_point_expand(const DdeSystem& sys, size_t N);

// Truncated t-series with MultiPoly coefficients (free of the t variable);
// the symbolic-coefficient twin of USeries used on deformed systems where
// coefficients live in Q[u, eps].
class MSeries {
 public:
  MSeries(VarTablePtr table, MonomialOrder order, size_t N);
  static MSeries of_poly(const MultiPoly& p, size_t t_var, size_t N);

  size_t order() const { return c_.size(); }
  const MultiPoly& coeff(size_t j) const { return c_.at(j); }
  MultiPoly& coeff_mut(size_t j) { return c_.at(j); }
  const VarTablePtr& table() const { return table_; }

  bool is_zero() const;
  MSeries truncated(size_t N) const;
  friend MSeries operator+(const MSeries& a, const MSeries& b);
  friend MSeries operator-(const MSeries& a, const MSeries& b);
  friend MSeries operator*(const MSeries& a, const MSeries& b);

  // (c(u) - c(a)) / (u - a) coefficientwise, u given by index.
  MSeries delta(size_t u_var, const Rational& a) const;

 private:
  VarTablePtr table_;
  MonomialOrder order_ = MonomialOrder::degrevlex(0);
  std::vector<MultiPoly> c_;
};

MSeries eval_poly_at_mseries(const MultiPoly& P, const std::map<size_t, MSeries>& bindings, size_t t_var, size_t N);

// Fixed-point expansion with symbolic coefficients; handles deformed systems
// (eps present). Coefficients live on a table of the non-t variables of the
// system (u and possibly eps).
std::vector<MSeries> fixed_point_expand_symbolic(const DdeSystem& sys, size_t N);

}  // namespace dde
