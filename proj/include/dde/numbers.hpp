#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmp.h>

namespace dde {

// Arbitrary-precision integer backed by GMP. Value semantics throughout.
class Integer {
 public:
  Integer() { mpz_init(z_); }
  Integer(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  Integer(int v) : Integer(static_cast<long>(v)) {}
  explicit Integer(std::string_view s);

  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Integer() { mpz_clear(z_); }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  int sign() const { return mpz_sgn(z_); }
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const { return mpz_get_si(z_); }

  friend Integer operator+(const Integer& a, const Integer& b) {
    Integer r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    Integer r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    Integer r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator-(const Integer& a) {
    Integer r;
    mpz_neg(r.z_, a.z_);
    return r;
  }
  Integer& operator+=(const Integer& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  // Floor division (rounds toward -inf), used by the degree-bound formulas.
  static Integer fdiv(const Integer& a, const Integer& b);
  // Exact division; asserts divisibility in debug builds.
  static Integer divexact(const Integer& a, const Integer& b);
  static Integer gcd(const Integer& a, const Integer& b);
  static Integer pow(const Integer& base, unsigned long e);
  static Integer factorial(unsigned long n);

  int compare(const Integer& o) const { return mpz_cmp(z_, o.z_); }
  friend bool operator==(const Integer& a, const Integer& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Integer& a, const Integer& b) { return a.compare(b) != 0; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return a.compare(b) >= 0; }

  std::string str() const;
  size_t bit_size() const { return mpz_sizeinbase(z_, 2); }

  const mpz_t& raw() const { return z_; }
  mpz_t& raw() { return z_; }

 private:
  mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const Integer& z);

// Exact rational number. Invariants (maintained by GMP canonicalization):
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(int v) : Rational(static_cast<long>(v)) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Integer& num);
  // Accepts "p", "-p", "p/q".
  explicit Rational(std::string_view s);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Integer numerator() const {
    Integer n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  Integer denominator() const {
    Integer d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  void add_mul(const Rational& a, const Rational& b);  // *this += a*b

  Rational pow(long e) const;
  Rational inverse() const;
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  int compare(const Rational& o) const { return mpq_cmp(q_, o.q_); }
  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

  std::string str() const;

  const mpq_t& raw() const { return q_; }
  mpq_t& raw() { return q_; }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace dde
