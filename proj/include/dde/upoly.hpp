#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dde/numbers.hpp"

namespace dde {

// Dense univariate polynomial over the rationals (ascending coefficients,
// no trailing zeros). The coefficient type of truncated series and the
// workhorse behind univariate gcds and contents.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  static UPoly zero() { return UPoly(); }
  static UPoly one() { return UPoly(Rational(1)); }
  static UPoly x(unsigned e = 1);
  static UPoly from_coeffs(std::vector<Rational> ascending);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& operator[](size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const Rational& c) const;
  UPoly shifted(unsigned k) const;  // * x^k

  Rational eval(const Rational& a) const;
  UPoly derivative() const;
  // Exact quotient (p - p(a)) / (x - a); the discrete-derivative kernel.
  UPoly divided_difference(const Rational& a) const;
  // Substitute x -> x + a.
  UPoly shift_argument(const Rational& a) const;

  static UPoly rem(UPoly a, const UPoly& b);
  static std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b);
  static UPoly gcd(UPoly a, UPoly b);  // normalized output
  UPoly squarefree() const;

  // Integer content cleared, leading coefficient positive.
  UPoly normalized() const;
  UPoly monic() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "u") const;

 private:
  std::vector<Rational> c_;

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

}  // namespace dde
