#include "dde/numbers.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace dde {

Integer::Integer(std::string_view s) {
  std::string buf(s);
  if (mpz_init_set_str(z_, buf.c_str(), 10) != 0) {
    mpz_clear(z_);
    throw std::invalid_argument("Integer: cannot parse '" + buf + "'");
  }
}

Integer Integer::fdiv(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer::fdiv: division by zero");
  Integer r;
  mpz_fdiv_q(r.z_, a.z_, b.z_);
  return r;
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer::divexact: division by zero");
  assert(mpz_divisible_p(a.z_, b.z_));
  Integer r;
  mpz_divexact(r.z_, a.z_, b.z_);
  return r;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.z_, a.z_, b.z_);
  return r;
}

Integer Integer::pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.z_, base.z_, e);
  return r;
}

Integer Integer::factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.z_, n);
  return r;
}

std::string Integer::str() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Integer& z) { return os << z.str(); }

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational::Rational(const Integer& num) {
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
}

Rational::Rational(std::string_view s) {
  std::string buf(s);
  mpq_init(q_);
  if (mpq_set_str(q_, buf.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
    mpq_clear(q_);
    throw std::invalid_argument("Rational: cannot parse '" + buf + "'");
  }
  mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
  Rational p;
  mpq_mul(p.q_, a.q_, b.q_);
  mpq_add(q_, q_, p.q_);
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rational::pow: 0 to negative power");
    return inverse().pow(-e);
  }
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational::inverse: zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace dde
