#include "dde/series.hpp"

#include <algorithm>
#include <sstream>

#include "dde/division.hpp"

namespace dde {

TSeries TSeries::constant(const Rational& c, size_t N) {
  TSeries s(N);
  if (N > 0) s.c_[0] = c;
  return s;
}

TSeries TSeries::t(size_t N) {
  TSeries s(N);
  if (N > 1) s.c_[1] = Rational(1);
  return s;
}

bool TSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

size_t TSeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return c_.size();
}

TSeries TSeries::truncated(size_t N) const {
  TSeries s(std::min(N, c_.size()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = c_[i];
  return s;
}

TSeries operator+(const TSeries& a, const TSeries& b) {
  TSeries s(std::min(a.order(), b.order()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

TSeries operator-(const TSeries& a, const TSeries& b) {
  TSeries s(std::min(a.order(), b.order()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
  return s;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  size_t N = std::min(a.order(), b.order());
  TSeries s(N);
  for (size_t i = 0; i < N; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < N; ++j) {
      if (b.c_[j].is_zero()) continue;
      s.c_[i + j].add_mul(a.c_[i], b.c_[j]);
    }
  }
  return s;
}

TSeries TSeries::scaled(const Rational& c) const {
  TSeries s(order());
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] * c;
  return s;
}

std::string TSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
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
  if (!first) os << " + ";
  os << "O(" << var << "^" << c_.size() << ")";
  return os.str();
}

USeries USeries::of_upoly(const UPoly& p, size_t N) {
  USeries s(N);
  if (N > 0) s.c_[0] = p;
  return s;
}

USeries USeries::constant(const Rational& c, size_t N) { return of_upoly(UPoly(c), N); }

USeries USeries::u(size_t N) { return of_upoly(UPoly::x(1), N); }

USeries USeries::t(size_t N) {
  USeries s(N);
  if (N > 1) s.c_[1] = UPoly::one();
  return s;
}

USeries USeries::of_tseries(const TSeries& s) {
  USeries r(s.order());
  for (size_t i = 0; i < s.order(); ++i) r.c_[i] = UPoly(s[i]);
  return r;
}

bool USeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

size_t USeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return c_.size();
}

long USeries::max_u_degree() const {
  long d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

USeries USeries::truncated(size_t N) const {
  USeries s(std::min(N, c_.size()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = c_[i];
  return s;
}

USeries operator+(const USeries& a, const USeries& b) {
  USeries s(std::min(a.order(), b.order()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

USeries operator-(const USeries& a, const USeries& b) {
  USeries s(std::min(a.order(), b.order()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
  return s;
}

USeries operator*(const USeries& a, const USeries& b) {
  size_t N = std::min(a.order(), b.order());
  USeries s(N);
  for (size_t i = 0; i < N; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < N; ++j) {
      if (b.c_[j].is_zero()) continue;
      s.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return s;
}

USeries USeries::scaled(const Rational& c) const {
  USeries s(order());
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i].scaled(c);
  return s;
}

USeries USeries::shifted_t(size_t k) const {
  USeries s(order());
  for (size_t i = 0; i + k < c_.size(); ++i) s.c_[i + k] = c_[i];
  return s;
}

USeries USeries::delta(const Rational& a) const {
  USeries s(order());
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i].divided_difference(a);
  return s;
}

USeries USeries::derivative_u() const {
  USeries s(order());
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i].derivative();
  return s;
}

TSeries USeries::eval_u(const Rational& a) const {
  TSeries s(order());
  for (size_t i = 0; i < c_.size(); ++i) s.at(i) = c_[i].eval(a);
  return s;
}

std::string USeries::str(const std::string& tvar, const std::string& uvar) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool paren = c_[i].coeffs().size() > 1 || (i > 0 && !c_[i].is_constant());
    std::string cs = c_[i].str(uvar);
    if (i == 0) {
      os << cs;
    } else {
      if (paren || cs.find(' ') != std::string::npos || cs.find('-') != std::string::npos)
        os << "(" << cs << ")*";
      else if (cs != "1")
        os << cs << "*";
      os << tvar;
      if (i > 1) os << "^" << i;
    }
  }
  if (!first) os << " + ";
  os << "O(" << tvar << "^" << c_.size() << ")";
  return os.str();
}

TSeries specialize(const USeries& F, const Rational& a, int ell) {
  if (ell < 0) throw StructuralError("specialize: negative derivative order");
  USeries d = F;
  for (int i = 0; i < ell; ++i) d = d.derivative_u();
  return d.eval_u(a);
}

USeries eval_poly_at_series(const MultiPoly& P, const std::map<size_t, USeries>& bindings, size_t t_var, size_t N) {
  for (const auto& [v, s] : bindings) {
    if (v >= P.table()->size()) throw StructuralError("eval_poly_at_series: bad variable index");
    N = std::min(N, s.order());
  }
  USeries acc(N);
  std::map<std::pair<size_t, Exponent>, USeries> powers;
  auto power_of = [&](size_t v, Exponent e) -> const USeries& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto bit = bindings.find(v);
    if (bit == bindings.end())
      throw StructuralError("eval_poly_at_series: unbound variable '" + P.table()->name(v) + "'");
    USeries p = USeries::constant(Rational(1), N);
    USeries base = bit->second.truncated(N);
    for (Exponent i = 0; i < e; ++i) p = p * base;  // exponents stay small here
    return powers.emplace(key, std::move(p)).first->second;
  };
  for (const auto& term : P.terms()) {
    Exponent te = term.mono[t_var];
    if (te >= N) continue;
    USeries prod = USeries::constant(term.coeff, N);
    for (size_t v = 0; v < term.mono.size(); ++v) {
      if (v == t_var || term.mono[v] == 0) continue;
      prod = prod * power_of(v, term.mono[v]);
    }
    if (te > 0) prod = prod.shifted_t(te);
    acc = acc + prod;
  }
  return acc;
}

std::pair<std::vector<USeries>, SpecializationVector> fixed_point_expand(const DdeSystem& sys, size_t N) {
  if (sys.has_eps)
    throw StructuralError("fixed_point_expand: deformed systems need the symbolic expansion");
  if (N == 0) throw StructuralError("fixed_point_expand: zero truncation order");
  size_t t_idx = sys.t_index();
  size_t u_idx = sys.u_index();

  std::vector<USeries> F;
  for (int i = 0; i < sys.n; ++i) F.push_back(USeries::of_upoly(sys.f[i], N));

  // Coefficient m of F depends only on coefficients < m of the right side's
  // Q-part, so expanding with a growing truncation converges in N-1 rounds.
  for (size_t m = 2; m <= N; ++m) {
    std::map<size_t, USeries> bind;
    for (int i = 1; i <= sys.n; ++i) {
      USeries cur = F[i - 1].truncated(m);
      for (int ell = 0; ell <= sys.k; ++ell) {
        bind.emplace(sys.y_index(i, ell), cur);
        if (ell < sys.k) cur = cur.delta(sys.a);
      }
    }
    bind.emplace(u_idx, USeries::u(m));
    for (int i = 0; i < sys.n; ++i) {
      USeries rhs = eval_poly_at_series(sys.q[i], bind, t_idx, m).shifted_t(1) + USeries::of_upoly(sys.f[i], m);
      // splice the now-correct prefix into the full-length series
      for (size_t j = 0; j < m; ++j) F[i].coeff_mut(j) = rhs.coeff(j);
    }
  }

  SpecializationVector spec;
  spec.n = sys.n;
  spec.k = sys.k;
  for (int i = 1; i <= sys.n; ++i)
    for (int ell = 0; ell < sys.k; ++ell) spec.z.push_back(specialize(F[i - 1], sys.a, ell));
  return {std::move(F), std::move(spec)};
}

MSeries::MSeries(VarTablePtr table, MonomialOrder order, size_t N)
    : table_(std::move(table)), order_(std::move(order)) {
  c_.assign(N, MultiPoly::zero(table_, order_));
}

MSeries MSeries::of_poly(const MultiPoly& p, size_t t_var, size_t N) {
  MSeries s(p.table(), p.order(), N);
  for (const auto& term : p.terms()) {
    Exponent te = term.mono[t_var];
    if (te >= N) continue;
    Monomial m = term.mono;
    m[t_var] = 0;
    s.c_[te] = s.c_[te] + MultiPoly::monomial(p.table(), std::move(m), term.coeff, p.order());
  }
  return s;
}

bool MSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

MSeries MSeries::truncated(size_t N) const {
  MSeries s(table_, order_, std::min(N, c_.size()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = c_[i];
  return s;
}

MSeries operator+(const MSeries& a, const MSeries& b) {
  MSeries s(a.table_, a.order_, std::min(a.order(), b.order()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

MSeries operator-(const MSeries& a, const MSeries& b) {
  MSeries s(a.table_, a.order_, std::min(a.order(), b.order()));
  for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
  return s;
}

MSeries operator*(const MSeries& a, const MSeries& b) {
  size_t N = std::min(a.order(), b.order());
  MSeries s(a.table_, a.order_, N);
  for (size_t i = 0; i < N; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < N; ++j) {
      if (b.c_[j].is_zero()) continue;
      s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return s;
}

MSeries MSeries::delta(size_t u_var, const Rational& a) const {
  MSeries s(table_, order_, c_.size());
  MultiPoly u_minus_a =
      MultiPoly::variable(table_, u_var, 1, order_) - MultiPoly::constant(table_, a, order_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::map<size_t, MultiPoly> at_a{{u_var, MultiPoly::constant(table_, a, order_)}};
    MultiPoly num = c_[i] - c_[i].substitute(at_a, table_, order_);
    if (num.is_zero()) continue;
    auto q = exact_divide(num, u_minus_a);
    if (!q) throw StructuralError("MSeries::delta: inexact divided difference");
    s.c_[i] = std::move(*q);
  }
  return s;
}

MSeries eval_poly_at_mseries(const MultiPoly& P, const std::map<size_t, MSeries>& bindings, size_t t_var, size_t N) {
  if (bindings.empty()) throw StructuralError("eval_poly_at_mseries: no bindings");
  const MSeries& first = bindings.begin()->second;
  for (const auto& [v, s] : bindings) N = std::min(N, s.order());
  MSeries acc(first.table(), first.coeff(0).order(), N);
  std::map<std::pair<size_t, Exponent>, MSeries> powers;
  auto power_of = [&](size_t v, Exponent e) -> const MSeries& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto bit = bindings.find(v);
    if (bit == bindings.end())
      throw StructuralError("eval_poly_at_mseries: unbound variable '" + P.table()->name(v) + "'");
    MSeries p = MSeries::of_poly(MultiPoly::constant(first.table(), Rational(1), first.coeff(0).order()), 0, N);
    // note: t never appears inside coefficient polynomials, index 0 is safe
    MSeries base = bit->second.truncated(N);
    for (Exponent i = 0; i < e; ++i) p = p * base;
    return powers.emplace(key, std::move(p)).first->second;
  };
  for (const auto& term : P.terms()) {
    Exponent te = term.mono[t_var];
    if (te >= N) continue;
    MSeries prod = MSeries::of_poly(MultiPoly::constant(first.table(), term.coeff, first.coeff(0).order()), 0, N);
    for (size_t v = 0; v < term.mono.size(); ++v) {
      if (v == t_var || term.mono[v] == 0) continue;
      prod = prod * power_of(v, term.mono[v]);
    }
    // multiply by t^te: shift coefficients
    MSeries shifted(first.table(), first.coeff(0).order(), N);
    for (size_t i = 0; i + te < N; ++i) shifted.coeff_mut(i + te) = prod.coeff(i);
    acc = acc + shifted;
  }
  return acc;
}

std::vector<MSeries> fixed_point_expand_symbolic(const DdeSystem& sys, size_t N) {
  if (N == 0) throw StructuralError("fixed_point_expand_symbolic: zero truncation order");
  size_t t_idx = sys.t_index();
  size_t u_idx = sys.u_index();

  // Coefficient table: every system variable except t (u, eps); y-variables
  // never appear inside coefficients but keeping one shared table is simpler.
  std::vector<std::string> names;
  for (size_t v = 0; v < sys.qtable->size(); ++v)
    if (v != t_idx) names.push_back(sys.qtable->name(v));
  VarTablePtr ctable = VarTable::make(names);
  MonomialOrder corder = MonomialOrder::degrevlex(ctable->size());
  size_t cu = ctable->index_of("u");

  auto lift_f = [&](const UPoly& fp) {
    MSeries s(ctable, corder, N);
    std::vector<MultiPoly::Term> terms;
    for (size_t i = 0; i < fp.coeffs().size(); ++i) {
      if (fp.coeffs()[i].is_zero()) continue;
      Monomial m(ctable->size(), 0);
      m[cu] = static_cast<Exponent>(i);
      terms.push_back({std::move(m), fp.coeffs()[i]});
    }
    s.coeff_mut(0) = MultiPoly::from_terms(ctable, std::move(terms), corder);
    return s;
  };

  std::vector<MSeries> F;
  for (int i = 0; i < sys.n; ++i) F.push_back(lift_f(sys.f[i]));

  // Bindings for the non-series variables of Q: u and (for deformed systems)
  // eps map to themselves as coefficient symbols.
  auto self_series = [&](const std::string& name) {
    MSeries s(ctable, corder, N);
    s.coeff_mut(0) = MultiPoly::variable(ctable, ctable->index_of(name), 1, corder);
    return s;
  };

  for (size_t m = 2; m <= N; ++m) {
    std::map<size_t, MSeries> bind;
    for (int i = 1; i <= sys.n; ++i) {
      MSeries cur = F[i - 1].truncated(m);
      for (int ell = 0; ell <= sys.k; ++ell) {
        bind.emplace(sys.y_index(i, ell), cur);
        if (ell < sys.k) cur = cur.delta(cu, sys.a);
      }
    }
    bind.emplace(u_idx, self_series("u").truncated(m));
    if (sys.has_eps) bind.emplace(sys.eps_index(), self_series("eps").truncated(m));
    for (int i = 0; i < sys.n; ++i) {
      MSeries qv = eval_poly_at_mseries(sys.q[i], bind, t_idx, m);
      MSeries rhs(ctable, corder, m);
      for (size_t j = 0; j + 1 < m; ++j) rhs.coeff_mut(j + 1) = qv.coeff(j);
      rhs = rhs + lift_f(sys.f[i]).truncated(m);
      for (size_t j = 0; j < m; ++j) F[i].coeff_mut(j) = rhs.coeff(j);
    }
  }
  return F;
}

}  // namespace dde
