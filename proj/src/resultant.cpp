#include "dde/resultant.hpp"

#include <algorithm>

#include "dde/division.hpp"
#include "dde/upoly.hpp"

namespace dde {

namespace {

long vdeg(const std::vector<MultiPoly>& a) { return static_cast<long>(a.size()) - 1; }

void vtrim(std::vector<MultiPoly>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::vector<MultiPoly> vscale(std::vector<MultiPoly> a, const MultiPoly& c) {
  for (auto& x : a) x = x * c;
  return a;
}

// Pseudo-remainder prem(A, B) = rem(lc(B)^{degA-degB+1} * A, B), computed by
// repeated top cancellation with the deficit of multiplications patched at
// the end.
std::vector<MultiPoly> vprem(std::vector<MultiPoly> A, const std::vector<MultiPoly>& B) {
  const MultiPoly& d = B.back();
  long needed = vdeg(A) - vdeg(B) + 1;
  long count = 0;
  while (!A.empty() && vdeg(A) >= vdeg(B)) {
    size_t shift = A.size() - B.size();
    MultiPoly lcA = A.back();
    for (size_t i = 0; i + 1 < A.size(); ++i) {
      A[i] = A[i] * d;
      if (i >= shift) A[i] = A[i] - lcA * B[i - shift];
    }
    A.pop_back();
    vtrim(A);
    ++count;
  }
  if (count < needed) {
    MultiPoly f = d.pow(static_cast<Exponent>(needed - count));
    A = vscale(std::move(A), f);
  }
  return A;
}

std::vector<MultiPoly> vdivexact(std::vector<MultiPoly> a, const MultiPoly& d) {
  for (auto& x : a) {
    if (x.is_zero()) continue;
    auto q = exact_divide(x, d);
    if (!q) throw StructuralError("resultant: inexact subresultant division");
    x = std::move(*q);
  }
  return a;
}

MultiPoly mp_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw StructuralError("resultant: inexact division");
  return *q;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, size_t var) {
  p.check_compatible(q, "resultant");
  if (p.is_zero() || q.is_zero()) throw StructuralError("resultant: zero input");
  if (var >= p.table()->size()) throw StructuralError("resultant: unknown variable");
  long dp = static_cast<long>(p.degree_in(var));
  long dq = static_cast<long>(q.degree_in(var));
  if (dp == 0 && dq == 0) throw StructuralError("resultant: neither input involves the variable");

  std::vector<MultiPoly> A = coeffs_in(p, var);
  std::vector<MultiPoly> B = coeffs_in(q, var);
  int s = 1;
  if (dp < dq) {
    std::swap(A, B);
    if ((dp & 1) && (dq & 1)) s = -s;
  }
  const MultiPoly one = MultiPoly::constant(p.table(), Rational(1), p.order());
  if (vdeg(B) == 0) {
    MultiPoly r = B[0].pow(static_cast<Exponent>(vdeg(A)));
    return s < 0 ? -r : r;
  }

  MultiPoly g = one, h = one;
  while (true) {
    long da = vdeg(A), db = vdeg(B);
    long delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    std::vector<MultiPoly> R = vprem(A, B);
    A = std::move(B);
    if (R.empty()) return MultiPoly::zero(p.table(), p.order());  // common factor in var
    MultiPoly divisor = g;
    for (long i = 0; i < delta; ++i) divisor = divisor * h;
    B = vdivexact(std::move(R), divisor);
    g = A.back();
    if (delta > 0) {
      MultiPoly gd = g.pow(static_cast<Exponent>(delta));
      h = (delta == 1) ? gd : mp_exact(gd, h.pow(static_cast<Exponent>(delta - 1)));
    }
    if (vdeg(B) == 0) break;
  }
  long e = vdeg(A);
  MultiPoly num = B[0].pow(static_cast<Exponent>(e));
  MultiPoly res = (e <= 1) ? num : mp_exact(num, h.pow(static_cast<Exponent>(e - 1)));
  return s < 0 ? -res : res;
}

namespace {

std::vector<size_t> effective_vars(const MultiPoly& p, const MultiPoly& q) {
  std::vector<size_t> vars;
  for (size_t v = 0; v < p.table()->size(); ++v)
    if (p.involves(v) || q.involves(v)) vars.push_back(v);
  return vars;
}

UPoly to_upoly(const MultiPoly& p, size_t var) {
  std::vector<Rational> cs(p.degree_in(var) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    for (size_t v = 0; v < t.mono.size(); ++v)
      if (v != var && t.mono[v]) throw StructuralError("to_upoly: polynomial is not univariate");
    cs[t.mono[var]] += t.coeff;
  }
  return UPoly::from_coeffs(std::move(cs));
}

MultiPoly from_upoly(const UPoly& u, VarTablePtr table, const MonomialOrder& order, size_t var) {
  std::vector<MultiPoly::Term> terms;
  for (size_t i = 0; i < u.coeffs().size(); ++i) {
    if (u.coeffs()[i].is_zero()) continue;
    Monomial m(table->size(), 0);
    m[var] = static_cast<Exponent>(i);
    terms.push_back({std::move(m), u.coeffs()[i]});
  }
  return MultiPoly::from_terms(std::move(table), std::move(terms), order);
}

// Evaluate the s-variable of p at a rational point, yielding a UPoly in z.
UPoly eval_s(const std::vector<std::vector<Rational>>& zs_coeffs, const Rational& tau) {
  std::vector<Rational> out(zs_coeffs.size(), Rational(0));
  for (size_t zdeg = 0; zdeg < zs_coeffs.size(); ++zdeg) {
    Rational acc(0);
    const auto& row = zs_coeffs[zdeg];
    for (size_t i = row.size(); i-- > 0;) acc = acc * tau + row[i];
    out[zdeg] = std::move(acc);
  }
  return UPoly::from_coeffs(std::move(out));
}

// Dense (z-degree) x (s-degree) coefficient grid of p.
std::vector<std::vector<Rational>> grid_of(const MultiPoly& p, size_t svar, size_t zvar) {
  std::vector<std::vector<Rational>> g(p.degree_in(zvar) + 1);
  for (auto& row : g) row.assign(p.degree_in(svar) + 1, Rational(0));
  for (const auto& t : p.terms()) g[t.mono[zvar]][t.mono[svar]] += t.coeff;
  return g;
}

// Lagrange interpolation through (points[i], values[i]).
UPoly interpolate(const std::vector<Rational>& points, const std::vector<Rational>& values) {
  UPoly acc;
  for (size_t i = 0; i < points.size(); ++i) {
    UPoly li = UPoly::one();
    Rational denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      li = li * UPoly::from_coeffs({-points[j], Rational(1)});
      denom *= points[i] - points[j];
    }
    acc += li.scaled(values[i] / denom);
  }
  return acc;
}

}  // namespace

MultiPoly gcd_bivariate(const MultiPoly& p, const MultiPoly& q) {
  p.check_compatible(q, "gcd_bivariate");
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  auto vars = effective_vars(p, q);
  if (vars.size() > 2) throw StructuralError("gcd_bivariate: more than two effective variables");
  const auto table = p.table();
  const auto& order = p.order();
  if (vars.empty()) return MultiPoly::constant(table, Rational(1), order);
  if (vars.size() == 1) {
    UPoly g = UPoly::gcd(to_upoly(p, vars[0]), to_upoly(q, vars[0]));
    return from_upoly(g, table, order, vars[0]);
  }

  size_t svar = vars[0], zvar = vars[1];
  // Contents with respect to z live in Q[s]; split them off first.
  MultiPoly cont_p = content_in(p, svar);
  MultiPoly cont_q = content_in(q, svar);
  MultiPoly pp = mp_exact(p, cont_p);
  MultiPoly qq = mp_exact(q, cont_q);
  UPoly gcont = UPoly::gcd(to_upoly(cont_p, svar), to_upoly(cont_q, svar));

  auto gp = grid_of(pp, svar, zvar);
  auto gq = grid_of(qq, svar, zvar);
  UPoly lcp = UPoly::from_coeffs(gp.back());
  UPoly lcq = UPoly::from_coeffs(gq.back());
  UPoly glc = UPoly::gcd(lcp, lcq);

  long sdeg_bound = std::min(pp.degree_in(svar), qq.degree_in(svar)) + std::max<long>(glc.degree(), 0);
  size_t points_needed = static_cast<size_t>(sdeg_bound) + 1;

  std::vector<Rational> points;
  std::vector<UPoly> samples;
  long best_deg = -2;  // unset
  long tau_seq = 0;
  int safety = 0;
  while (true) {
    if (++safety > 4000) throw StructuralError("gcd_bivariate: interpolation did not stabilize");
    Rational tau(tau_seq, 1);
    ++tau_seq;
    if (lcp.eval(tau).is_zero() || lcq.eval(tau).is_zero()) continue;
    UPoly g_tau = UPoly::gcd(eval_s(gp, tau), eval_s(gq, tau));
    long d = g_tau.degree();
    if (best_deg == -2 || d < best_deg) {
      best_deg = d;
      points.clear();
      samples.clear();
    }
    if (d > best_deg) continue;  // unlucky point
    if (best_deg == 0) {
      return from_upoly(gcont, table, order, svar).normalized();
    }
    points.push_back(tau);
    samples.push_back(g_tau.monic().scaled(glc.eval(tau)));
    if (points.size() < points_needed) continue;

    // Interpolate each z-coefficient as a polynomial in s.
    std::vector<MultiPoly::Term> terms;
    for (long zd = 0; zd <= best_deg; ++zd) {
      std::vector<Rational> vals;
      vals.reserve(points.size());
      for (const auto& smp : samples) vals.push_back(smp[static_cast<size_t>(zd)]);
      UPoly coef = interpolate(points, vals);
      for (size_t i = 0; i < coef.coeffs().size(); ++i) {
        if (coef.coeffs()[i].is_zero()) continue;
        Monomial m(table->size(), 0);
        m[svar] = static_cast<Exponent>(i);
        m[zvar] = static_cast<Exponent>(zd);
        terms.push_back({std::move(m), coef.coeffs()[i]});
      }
    }
    MultiPoly G = MultiPoly::from_terms(table, std::move(terms), order);
    if (!G.is_zero()) {
      MultiPoly Gpp = mp_exact(G, content_in(G, svar));
      if (exact_divide(pp, Gpp) && exact_divide(qq, Gpp)) {
        return (Gpp * from_upoly(gcont, table, order, svar)).normalized();
      }
    }
    // Certification failed: gather one more point and retry.
    ++points_needed;
  }
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) throw StructuralError("squarefree_part: zero polynomial");
  std::vector<size_t> vars;
  for (size_t v = 0; v < p.table()->size(); ++v)
    if (p.involves(v)) vars.push_back(v);
  if (vars.size() > 2) throw StructuralError("squarefree_part: more than two effective variables");
  const auto table = p.table();
  const auto& order = p.order();
  if (vars.empty()) return MultiPoly::constant(table, Rational(1), order);
  if (vars.size() == 1) {
    return from_upoly(to_upoly(p, vars[0]).squarefree(), table, order, vars[0]).normalized();
  }
  size_t svar = vars[0], zvar = vars[1];
  MultiPoly cont = content_in(p, svar);  // in Q[s]
  MultiPoly pp = mp_exact(p, cont);
  MultiPoly g = gcd_bivariate(pp, pp.derivative(zvar));
  MultiPoly sz = mp_exact(pp, g);
  MultiPoly sc = from_upoly(to_upoly(cont, svar).squarefree(), table, order, svar);
  return (sz * sc).normalized();
}

}  // namespace dde
