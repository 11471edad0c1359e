#include "dde/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dde {

UPoly UPoly::x(unsigned e) {
  UPoly p;
  p.c_.assign(e + 1, Rational(0));
  p.c_[e] = Rational(1);
  return p;
}

UPoly UPoly::from_coeffs(std::vector<Rational> ascending) {
  UPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

const Rational& UPoly::operator[](size_t i) const {
  static const Rational kZero(0);
  return i < c_.size() ? c_[i] : kZero;
}

const Rational& UPoly::leading() const {
  if (c_.empty()) throw std::domain_error("UPoly: leading coefficient of zero");
  return c_.back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] -= b.c_[i];
  }
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  UPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j].add_mul(a.c_[i], b.c_[j]);
    }
  }
  r.trim();
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return UPoly();
  UPoly r(*this);
  for (auto& x : r.c_) x *= c;
  return r;
}

UPoly UPoly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  UPoly r;
  r.c_.assign(c_.size() + k, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

Rational UPoly::eval(const Rational& a) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  UPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return r;
}

UPoly UPoly::divided_difference(const Rational& a) const {
  // Synthetic division of p - p(a) by (x - a): the quotient of Horner's rule.
  if (c_.size() <= 1) return UPoly();
  UPoly q;
  q.c_.assign(c_.size() - 1, Rational(0));
  Rational carry = c_.back();
  for (size_t i = c_.size() - 1; i-- > 0;) {
    q.c_[i] = carry;
    carry = carry * a + c_[i];
  }
  q.trim();
  return q;
}

UPoly UPoly::shift_argument(const Rational& a) const {
  if (a.is_zero()) return *this;
  // Horner: p(x+a) built from the top coefficient down.
  UPoly acc;
  UPoly lin = UPoly::from_coeffs({a, Rational(1)});
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * lin;
    acc += UPoly(c_[i]);
  }
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly::divmod: division by zero");
  UPoly q;
  if (a.c_.size() >= b.c_.size()) q.c_.assign(a.c_.size() - b.c_.size() + 1, Rational(0));
  while (a.c_.size() >= b.c_.size() && !a.is_zero()) {
    Rational f = a.c_.back() / b.c_.back();
    size_t shift = a.c_.size() - b.c_.size();
    q.c_[shift] = f;
    for (size_t i = 0; i < b.c_.size(); ++i) a.c_[shift + i] -= f * b.c_[i];
    a.trim();
  }
  q.trim();
  return {std::move(q), std::move(a)};
}

UPoly UPoly::rem(UPoly a, const UPoly& b) { return divmod(std::move(a), b).second; }

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.normalized();
}

UPoly UPoly::squarefree() const {
  if (is_zero()) throw std::domain_error("UPoly::squarefree: zero polynomial");
  if (degree() == 0) return one();
  UPoly g = gcd(*this, derivative());
  return divmod(*this, g).first.normalized();
}

UPoly UPoly::normalized() const {
  if (is_zero()) return *this;
  Integer num_gcd(0);
  Integer den_lcm(1);
  for (const auto& c : c_) {
    num_gcd = Integer::gcd(num_gcd, c.numerator());
    Integer d = c.denominator();
    den_lcm = Integer::divexact(den_lcm * d, Integer::gcd(den_lcm, d));
  }
  Rational content(num_gcd, den_lcm);
  if (c_.back().sign() < 0) content = -content;
  return scaled(content.inverse());
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rational c = c_[i];
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (i == 0 || !c.is_one()) {
      os << c.str();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace dde
