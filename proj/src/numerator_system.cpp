#include "dde/numerator_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dde/division.hpp"
#include "dde/determinant.hpp"

namespace dde {

namespace {

// num / (u-a)^den_pow with lazy normalization; the fraction ring the
// Y-substitution is evaluated in.
struct FracPoly {
  MultiPoly num;
  int den_pow = 0;
};

struct FracRing {
  MultiPoly u_minus_a;

  FracPoly normalize(FracPoly f) const {
    while (f.den_pow > 0 && !f.num.is_zero()) {
      auto q = exact_divide(f.num, u_minus_a);
      if (!q) break;
      f.num = std::move(*q);
      --f.den_pow;
    }
    if (f.num.is_zero()) f.den_pow = 0;
    return f;
  }
  FracPoly add(const FracPoly& a, const FracPoly& b) const {
    int e = std::max(a.den_pow, b.den_pow);
    MultiPoly na = a.num * u_minus_a.pow(static_cast<Exponent>(e - a.den_pow));
    MultiPoly nb = b.num * u_minus_a.pow(static_cast<Exponent>(e - b.den_pow));
    return normalize({na + nb, e});
  }
  FracPoly mul(const FracPoly& a, const FracPoly& b) const {
    return normalize({a.num * b.num, a.den_pow + b.den_pow});
  }
  FracPoly pow(FracPoly base, Exponent e) const {
    FracPoly r{base.num.table() ? MultiPoly::constant(base.num.table(), Rational(1), base.num.order()) : MultiPoly(),
               0};
    while (true) {
      if (e & 1u) r = mul(r, base);
      e >>= 1u;
      if (!e) break;
      base = mul(base, base);
    }
    return r;
  }
};

}  // namespace

std::map<size_t, USeries> NumeratorSystem::series_bindings(const std::vector<USeries>& F,
                                                           const SpecializationVector& spec, size_t N) const {
  std::map<size_t, USeries> bind;
  for (int i = 1; i <= n; ++i) bind.emplace(x_var(i), F[static_cast<size_t>(i - 1)].truncated(N));
  for (int i = 1; i <= n; ++i)
    for (int ell = 0; ell < k; ++ell)
      bind.emplace(z_var((i - 1) * k + ell), USeries::of_tseries(spec.of(i, ell)).truncated(N));
  bind.emplace(u_var(), USeries::u(N));
  return bind;
}

NumeratorSystem clear_denominators(const DdeSystem& sys) {
  NumeratorSystem ns;
  ns.n = sys.n;
  ns.k = sys.k;
  ns.a = sys.a;
  ns.has_eps = sys.has_eps;

  std::vector<std::string> names;
  for (int i = 1; i <= sys.n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("u");
  for (int j = 0; j < sys.n * sys.k; ++j) names.push_back("z" + std::to_string(j));
  names.push_back("t");
  if (sys.has_eps) names.push_back("eps");
  ns.table = VarTable::make(names);
  MonomialOrder order = MonomialOrder::degrevlex(ns.table->size());

  size_t u = ns.u_var();
  MultiPoly u_poly = MultiPoly::variable(ns.table, u, 1, order);
  MultiPoly a_poly = MultiPoly::constant(ns.table, sys.a, order);
  FracRing ring{u_poly - a_poly};

  // Y_{i,0} = x_i ; Y_{i,j} = (x_i - sum_{l<j} (u-a)^l / l! * z_{k(i-1)+l}) / (u-a)^j.
  std::vector<std::vector<FracPoly>> Y(static_cast<size_t>(sys.n));
  ns.y_numerators.assign(static_cast<size_t>(sys.n), {});
  for (int i = 1; i <= sys.n; ++i) {
    MultiPoly acc = MultiPoly::variable(ns.table, ns.x_var(i), 1, order);
    Rational lfact(1);
    for (int j = 0; j <= sys.k; ++j) {
      if (j == 0) {
        Y[i - 1].push_back({acc, 0});
      } else {
        Y[i - 1].push_back({acc, j});
      }
      ns.y_numerators[i - 1].push_back(Y[i - 1].back().num);
      if (j < sys.k) {
        if (j > 0) lfact *= Rational(j);
        MultiPoly zterm = MultiPoly::variable(ns.table, ns.z_var((i - 1) * sys.k + j), 1, order);
        acc = acc - ring.u_minus_a.pow(static_cast<Exponent>(j)).scaled(lfact.inverse()) * zterm;
      }
    }
  }

  size_t qt = sys.t_index();
  size_t qu = sys.u_index();
  MultiPoly t_poly = MultiPoly::variable(ns.table, ns.t_var(), 1, order);

  for (int i = 1; i <= sys.n; ++i) {
    // E_i = (u-a)^{m_i} ( f_i(u) - x_i + t*Q_i(Y, t, u) )
    FracPoly acc{MultiPoly::zero(ns.table, order), 0};
    const MultiPoly& Q = sys.q[static_cast<size_t>(i - 1)];
    for (const auto& term : Q.terms()) {
      FracPoly prod{MultiPoly::constant(ns.table, term.coeff, order), 0};
      for (size_t v = 0; v < term.mono.size(); ++v) {
        if (!term.mono[v]) continue;
        FracPoly base;
        if (v == qt) {
          base = {t_poly, 0};
        } else if (v == qu) {
          base = {u_poly, 0};
        } else if (sys.has_eps && v == sys.eps_index()) {
          base = {MultiPoly::variable(ns.table, ns.table->index_of("eps"), 1, order), 0};
        } else {
          // y variable: locate (i', l)
          size_t yi = v;  // y-variables are the leading block of qtable
          int fi = static_cast<int>(yi) / (sys.k + 1) + 1;
          int ell = static_cast<int>(yi) % (sys.k + 1);
          base = Y[fi - 1][static_cast<size_t>(ell)];
        }
        prod = ring.mul(prod, ring.pow(base, term.mono[v]));
      }
      acc = ring.add(acc, prod);
    }
    // f_i(u) - x_i + t * Q
    MultiPoly fx = MultiPoly::zero(ns.table, order);
    for (size_t d = 0; d < sys.f[static_cast<size_t>(i - 1)].coeffs().size(); ++d) {
      const Rational& c = sys.f[static_cast<size_t>(i - 1)].coeffs()[d];
      if (c.is_zero()) continue;
      fx = fx + u_poly.pow(static_cast<Exponent>(d)).scaled(c);
    }
    fx = fx - MultiPoly::variable(ns.table, ns.x_var(i), 1, order);
    acc = ring.mul(acc, {t_poly, 0});
    acc = ring.add(acc, {fx, 0});
    acc = ring.normalize(acc);
    ns.m_min.push_back(acc.den_pow);
    ns.m_def.push_back(std::max(acc.den_pow, sys.k));
    ns.E.push_back(acc.num.normalized());
  }
  return ns;
}

void build_det_and_p(NumeratorSystem& ns) {
  std::vector<size_t> xvars;
  for (int i = 1; i <= ns.n; ++i) xvars.push_back(ns.x_var(i));
  ns.det = jacobian_determinant(ns.E, xvars);
  ns.p = bordered_determinant(ns.E, xvars, ns.u_var());

  // Structural factors: a triangular Jacobian makes det the product of its
  // diagonal entries, which keeps later saturations cheap.
  std::vector<std::vector<MultiPoly>> J(static_cast<size_t>(ns.n));
  for (int i = 0; i < ns.n; ++i)
    for (int j = 0; j < ns.n; ++j) J[static_cast<size_t>(i)].push_back(ns.E[static_cast<size_t>(i)].derivative(xvars[static_cast<size_t>(j)]));
  bool lower = true, upper = true;
  for (int i = 0; i < ns.n; ++i)
    for (int j = 0; j < ns.n; ++j) {
      if (i < j && !J[i][j].is_zero()) lower = false;
      if (i > j && !J[i][j].is_zero()) upper = false;
    }
  ns.det_factors.clear();
  if ((lower || upper) && ns.n > 1) {
    for (int i = 0; i < ns.n; ++i) ns.det_factors.push_back(J[static_cast<size_t>(i)][static_cast<size_t>(i)].normalized());
  } else {
    ns.det_factors.push_back(ns.det.normalized());
  }
}

namespace {

DuplicatedSystem duplicate_impl(const std::vector<MultiPoly>& copy_polys, int n_x_per_copy, int copies, int n, int k,
                                const Rational& a, VarTablePtr src_table, const std::string& x_name) {
  DuplicatedSystem dup;
  dup.n = n;
  dup.k = k;
  dup.a = a;

  std::vector<std::string> names;
  for (int c = 0; c < copies; ++c)
    for (int i = 1; i <= n_x_per_copy; ++i) names.push_back("x" + std::to_string(c * n_x_per_copy + i));
  for (int c = 1; c <= copies; ++c) names.push_back("u" + std::to_string(c));
  for (int j = 0; j < n * k; ++j) names.push_back("z" + std::to_string(j));
  names.push_back("t");
  dup.table = VarTable::make(names);
  MonomialOrder order = MonomialOrder::degrevlex(dup.table->size());

  for (const auto& nm : names) {
    size_t idx = dup.table->index_of(nm);
    if (nm[0] == 'x') dup.x_vars.push_back(idx);
    if (nm[0] == 'u') dup.u_vars.push_back(idx);
    if (nm[0] == 'z') dup.z_vars.push_back(idx);
  }
  dup.t_var = dup.table->index_of("t");
  dup.z0_var = dup.table->index_of("z0");

  for (int c = 0; c < copies; ++c) {
    std::map<size_t, MultiPoly> bind;
    for (int i = 1; i <= n_x_per_copy; ++i) {
      size_t src = src_table->index_of(i == 1 && n_x_per_copy == 1 && !src_table->has(x_name + "1")
                                           ? x_name
                                           : x_name + std::to_string(i));
      bind.emplace(src, MultiPoly::variable(dup.table, dup.table->index_of("x" + std::to_string(c * n_x_per_copy + i)),
                                            1, order));
    }
    bind.emplace(src_table->index_of("u"),
                 MultiPoly::variable(dup.table, dup.table->index_of("u" + std::to_string(c + 1)), 1, order));
    for (const auto& p : copy_polys) {
      if (p.is_zero()) continue;
      dup.equations.push_back(p.substitute(bind, dup.table, order).normalized());
    }
  }

  MultiPoly sat = MultiPoly::variable(dup.table, dup.t_var, 1, order);
  for (size_t ui : dup.u_vars)
    sat = sat * (MultiPoly::variable(dup.table, ui, 1, order) - MultiPoly::constant(dup.table, a, order));
  for (size_t i = 0; i < dup.u_vars.size(); ++i)
    for (size_t j = i + 1; j < dup.u_vars.size(); ++j)
      sat = sat * (MultiPoly::variable(dup.table, dup.u_vars[i], 1, order) -
                   MultiPoly::variable(dup.table, dup.u_vars[j], 1, order));
  dup.sat = sat;

  for (int c = 0; c < copies; ++c) {
    for (int i = 1; i <= n_x_per_copy; ++i) {
      std::ostringstream os;
      os << "x" << (c * n_x_per_copy + i) << " <-> F" << i << "(t, U" << (c + 1) << ")";
      dup.correspondence.push_back(os.str());
    }
    dup.correspondence.push_back("u" + std::to_string(c + 1) + " <-> U" + std::to_string(c + 1));
  }
  for (int i = 1; i <= n; ++i)
    for (int ell = 0; ell < k; ++ell) {
      std::ostringstream os;
      os << "z" << ((i - 1) * k + ell) << " <-> (d/du)^" << ell << " F" << i << "(t, " << a.str() << ")";
      dup.correspondence.push_back(os.str());
    }
  return dup;
}

}  // namespace

DuplicatedSystem duplicate(const NumeratorSystem& ns) {
  if (ns.det.is_zero() && ns.p.is_zero() && ns.det_factors.empty())
    throw StructuralError("duplicate: build_det_and_p must run first");
  std::vector<MultiPoly> copy_polys = ns.E;
  copy_polys.push_back(ns.det);
  copy_polys.push_back(ns.p);
  return duplicate_impl(copy_polys, ns.n, ns.n * ns.k, ns.n, ns.k, ns.a, ns.table, "x");
}

DuplicatedSystem duplicate_triple(const std::vector<MultiPoly>& polys, int n, int k, const Rational& a,
                                  VarTablePtr source_table, const std::string& x_name) {
  return duplicate_impl(polys, 1, n * k, n, k, a, source_table, x_name);
}

std::pair<DdeSystem, DeformationParams> build_deformed_system(const DdeSystem& sys) {
  if (!sys.a.is_zero())
    throw StructuralError("build_deformed_system: catalytic point must be 0 (apply shift_catalytic_point first)");
  if (sys.has_eps) throw StructuralError("build_deformed_system: system is already deformed");

  NumeratorSystem ns = clear_denominators(sys);
  DeformationParams params;
  params.n = sys.n;
  params.k = sys.k;
  params.m = ns.m_def;
  for (int mi : params.m) params.M += mi;
  params.beta = (2 * params.M) / sys.k;
  params.alpha = 3L * sys.n * sys.n * sys.k * (params.beta + 1) + 3L * sys.n * params.M;
  params.note = "F_i(t^alpha, u) = G_i(t, u, eps=0) relates the deformed solution to the original";

  DdeSystem out;
  out.n = sys.n;
  out.k = sys.k;
  out.a = sys.a;
  out.has_eps = true;
  out.qtable = sys.qtable->extended_back({"eps"});
  MonomialOrder order = MonomialOrder::degrevlex(out.qtable->size());
  out.f = sys.f;

  size_t t_old = sys.t_index();
  MultiPoly t_alpha = MultiPoly::variable(out.qtable, out.qtable->index_of("t"),
                                          static_cast<Exponent>(params.alpha), order);
  MultiPoly eps_k =
      MultiPoly::variable(out.qtable, out.qtable->index_of("eps"), static_cast<Exponent>(sys.k), order);
  MultiPoly t_beta = MultiPoly::variable(out.qtable, out.qtable->index_of("t"),
                                         static_cast<Exponent>(params.beta), order);

  for (int i = 1; i <= sys.n; ++i) {
    // t^{alpha-1} Q_i(y, t^alpha, u) + eps^k sum_j gamma_{i,j} y_{D^k F_j}
    std::map<size_t, MultiPoly> bind{{t_old, t_alpha}};
    MultiPoly q_sub = sys.q[static_cast<size_t>(i - 1)].substitute(bind, out.qtable, order);
    MultiPoly qd = q_sub * MultiPoly::variable(out.qtable, out.qtable->index_of("t"),
                                               static_cast<Exponent>(params.alpha - 1), order);
    for (int j = 1; j <= sys.n; ++j) {
      MultiPoly gamma = (i == j)
                            ? MultiPoly::constant(out.qtable, Rational(Integer::pow(Integer(i), static_cast<unsigned long>(sys.k))), order)
                            : t_beta;
      MultiPoly yk = MultiPoly::variable(out.qtable, sys.y_index(j, sys.k), 1, order);
      qd = qd + eps_k * gamma * yk;
    }
    out.q.push_back(std::move(qd));
  }
  return {std::move(out), std::move(params)};
}

bool deformed_det_identity_holds(const DdeSystem& deformed, const DeformationParams& params, std::string* mismatch) {
  if (!deformed.has_eps) throw StructuralError("deformed_det_identity_holds: not a deformed system");
  int n = deformed.n, k = deformed.k;
  size_t N = static_cast<size_t>(n) + 1;

  NumeratorSystem ns = clear_denominators(deformed);
  build_det_and_p(ns);

  std::vector<MSeries> G = fixed_point_expand_symbolic(deformed, N);
  const VarTablePtr ctable = G[0].table();
  MonomialOrder corder = MonomialOrder::degrevlex(ctable->size());
  size_t cu = ctable->index_of("u");
  size_t ceps = ctable->index_of("eps");

  auto const_series = [&](MultiPoly p) {
    MSeries s(ctable, corder, N);
    s.coeff_mut(0) = std::move(p);
    return s;
  };

  std::map<size_t, MSeries> bind;
  for (int i = 1; i <= n; ++i) bind.emplace(ns.x_var(i), G[static_cast<size_t>(i - 1)]);
  for (int i = 1; i <= n; ++i) {
    for (int ell = 0; ell < k; ++ell) {
      MSeries d(ctable, corder, N);
      for (size_t m = 0; m < N; ++m) {
        MultiPoly c = G[static_cast<size_t>(i - 1)].coeff(m);
        for (int it = 0; it < ell; ++it) c = c.derivative(cu);
        std::map<size_t, MultiPoly> at0{{cu, MultiPoly::constant(ctable, Rational(0), corder)}};
        d.coeff_mut(m) = c.substitute(at0, ctable, corder);
      }
      bind.emplace(ns.z_var((i - 1) * k + ell), std::move(d));
    }
  }
  bind.emplace(ns.u_var(), const_series(MultiPoly::variable(ctable, cu, 1, corder)));
  bind.emplace(ns.table->index_of("eps"), const_series(MultiPoly::variable(ctable, ceps, 1, corder)));

  MSeries lhs = eval_poly_at_mseries(ns.det, bind, ns.t_var(), N);

  // u^{M-nk} * prod_j (-u^k + t eps^k j^k) mod t^{n+1}
  MSeries rhs = const_series(MultiPoly::constant(ctable, Rational(1), corder));
  for (int j = 1; j <= n; ++j) {
    MSeries factor(ctable, corder, N);
    factor.coeff_mut(0) = -MultiPoly::variable(ctable, cu, static_cast<Exponent>(k), corder);
    if (N > 1)
      factor.coeff_mut(1) =
          MultiPoly::variable(ctable, ceps, static_cast<Exponent>(k), corder)
              .scaled(Rational(Integer::pow(Integer(j), static_cast<unsigned long>(k))));
    rhs = rhs * factor;
  }
  long shift = params.M - static_cast<long>(n) * k;
  if (shift < 0) throw StructuralError("deformed_det_identity_holds: M < nk");
  if (shift > 0) {
    MultiPoly ushift = MultiPoly::variable(ctable, cu, static_cast<Exponent>(shift), corder);
    for (size_t m = 0; m < N; ++m) rhs.coeff_mut(m) = rhs.coeff(m) * ushift;
  }

  for (size_t m = 0; m < N; ++m) {
    if (!(lhs.coeff(m) == rhs.coeff(m))) {
      if (mismatch) {
        std::ostringstream os;
        os << "t^" << m << ": det gives " << lhs.coeff(m).str() << " but the formula gives " << rhs.coeff(m).str();
        *mismatch = os.str();
      }
      return false;
    }
  }
  return true;
}

}  // namespace dde
