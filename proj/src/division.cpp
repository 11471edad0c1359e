#include "dde/division.hpp"

#include <algorithm>
#include <map>

#include "dde/upoly.hpp"

namespace dde {

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& divisors, const MonomialOrder& order) {
  MultiPoly h = p.with_order(order);
  std::vector<MultiPoly> ds;
  ds.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw StructuralError("normal_form: zero divisor");
    ds.push_back(d.with_order(order));
  }
  std::vector<MultiPoly::Term> remainder;
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    bool reduced = false;
    for (const auto& g : ds) {
      if (!monomial_divides(g.leading_monomial(), lm)) continue;
      Monomial mu = monomial_div(lm, g.leading_monomial());
      Rational c = -(h.leading_coeff() / g.leading_coeff());
      h = MultiPoly::linear_combine(Rational(1), h, c, mu, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(h.terms().front());
      MultiPoly head = MultiPoly::monomial(h.table(), h.terms().front().mono, h.terms().front().coeff, order);
      h = h - head;
    }
  }
  return MultiPoly::from_terms(p.table(), std::move(remainder), order);
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& divisors) {
  return normal_form(p, divisors, p.order());
}

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d) {
  p.check_compatible(d, "exact_divide");
  if (d.is_zero()) throw StructuralError("exact_divide: division by zero polynomial");
  MultiPoly h = p;
  std::vector<MultiPoly::Term> quotient;
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    if (!monomial_divides(d.leading_monomial(), lm)) return std::nullopt;
    Monomial mu = monomial_div(lm, d.leading_monomial());
    Rational c = h.leading_coeff() / d.leading_coeff();
    quotient.push_back({mu, c});
    h = MultiPoly::linear_combine(Rational(1), h, -c, mu, d);
  }
  return MultiPoly::from_terms(p.table(), std::move(quotient), p.order());
}

std::pair<MultiPoly, int> divide_out_all(MultiPoly p, const MultiPoly& d) {
  int mult = 0;
  if (d.is_constant()) return {std::move(p), 0};
  while (!p.is_zero()) {
    auto q = exact_divide(p, d);
    if (!q) break;
    p = std::move(*q);
    ++mult;
  }
  return {std::move(p), mult};
}

std::vector<MultiPoly> coeffs_in(const MultiPoly& p, size_t var) {
  if (var >= p.table()->size()) throw StructuralError("coeffs_in: unknown variable");
  size_t deg = p.degree_in(var);
  std::vector<std::vector<MultiPoly::Term>> buckets(deg + 1);
  for (const auto& t : p.terms()) {
    MultiPoly::Term stripped = t;
    Exponent e = stripped.mono[var];
    stripped.mono[var] = 0;
    buckets[e].push_back(std::move(stripped));
  }
  std::vector<MultiPoly> out;
  out.reserve(deg + 1);
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(p.table(), std::move(b), p.order()));
  return out;
}

MultiPoly from_coeffs_in(const std::vector<MultiPoly>& coeffs, size_t var) {
  if (coeffs.empty()) throw StructuralError("from_coeffs_in: empty coefficient list");
  MultiPoly acc = MultiPoly::zero(coeffs[0].table(), coeffs[0].order());
  for (size_t e = 0; e < coeffs.size(); ++e) {
    Monomial m(coeffs[0].table()->size(), 0);
    m[var] = static_cast<Exponent>(e);
    acc = acc + coeffs[e].mul_monomial(m, Rational(1));
  }
  return acc;
}

MultiPoly content_in(const MultiPoly& p, size_t var) {
  if (var >= p.table()->size()) throw StructuralError("content_in: unknown variable");
  if (p.is_zero()) return p;
  // Group the terms by their var-free part; each group is a poly in var.
  std::map<Monomial, std::vector<Rational>> groups;
  for (const auto& t : p.terms()) {
    Monomial key = t.mono;
    Exponent e = key[var];
    key[var] = 0;
    auto& u = groups[key];
    if (u.size() <= e) u.resize(e + 1, Rational(0));
    u[e] += t.coeff;
  }
  UPoly g;
  for (auto& [key, u] : groups) {
    g = UPoly::gcd(std::move(g), UPoly::from_coeffs(std::move(u)));
    if (g.degree() == 0) break;  // constant gcd, nothing more to learn
  }
  std::vector<MultiPoly::Term> terms;
  for (size_t e = 0; e < g.coeffs().size(); ++e) {
    if (g.coeffs()[e].is_zero()) continue;
    Monomial m(p.table()->size(), 0);
    m[var] = static_cast<Exponent>(e);
    terms.push_back({std::move(m), g.coeffs()[e]});
  }
  return MultiPoly::from_terms(p.table(), std::move(terms), p.order()).normalized();
}

}  // namespace dde
