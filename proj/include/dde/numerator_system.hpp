#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dde/dde_system.hpp"
#include "dde/multipoly.hpp"
#include "dde/series.hpp"

namespace dde {

// The polynomialized system: E_i over [x_1..x_n, u, z_0..z_{nk-1}, t(, eps)]
// with E_i(u) = 0 at the solution series, plus the kernel determinant Det and
// the bordered determinant P.
struct NumeratorSystem {
  int n = 0;
  int k = 1;
  Rational a;
  bool has_eps = false;
  VarTablePtr table;
  std::vector<MultiPoly> E;
  std::vector<int> m_min;  // least exponents clearing the (u-a) denominators
  std::vector<int> m_def;  // max(m_min, k): the deformation-path exponents
  MultiPoly det;
  MultiPoly p;
  // Structural factorization of det when the Jacobian is triangular
  // (diagonal entries); otherwise the single factor det.
  std::vector<MultiPoly> det_factors;
  // Y_{i,j} substitution numerators: Y[i-1][j] = y_num / (u-a)^j.
  std::vector<std::vector<MultiPoly>> y_numerators;

  size_t x_var(int i) const { return table->index_of("x" + std::to_string(i)); }
  size_t u_var() const { return table->index_of("u"); }
  size_t z_var(int idx) const { return table->index_of("z" + std::to_string(idx)); }
  size_t t_var() const { return table->index_of("t"); }

  // Bindings x_i -> F_i, z -> specializations, u -> u for series checks.
  std::map<size_t, USeries> series_bindings(const std::vector<USeries>& F, const SpecializationVector& spec,
                                            size_t N) const;
};

// Multiplies each equation by the least power of (u - a) that clears the
// discrete-derivative denominators, introducing x_i for F_i(t,u) and
// z_{(i-1)k+l} for the l-th u-derivative of F_i at a (true derivatives; the
// 1/l! factors live in the substitution).
NumeratorSystem clear_denominators(const DdeSystem& sys);

// Fills in det (Jacobian determinant in the x's), p (last column replaced by
// the u-derivatives) and the structural det factors.
void build_det_and_p(NumeratorSystem& ns);

// The nk-fold duplicated system with its saturation polynomial.
struct DuplicatedSystem {
  int n = 0;
  int k = 1;
  Rational a;
  VarTablePtr table;  // x1..x_{n^2 k}, u1..u_{nk}, z0..z_{nk-1}, t
  std::vector<MultiPoly> equations;  // nk copies of (E_1..E_n, Det, P)
  MultiPoly sat;                     // t * prod_i (u_i - a) * prod_{i<j} (u_i - u_j)
  std::vector<size_t> x_vars, u_vars, z_vars;
  size_t t_var = 0;
  size_t z0_var = 0;
  std::vector<std::string> correspondence;  // variable <-> value table, for reports
};

DuplicatedSystem duplicate(const NumeratorSystem& ns);

// Duplication of an arbitrary copy-local triple (used by the reduction
// strategy on (E, dE/dx1, dE/du)): copies the given polynomials nk times in
// the variables x(+copy), u(+copy), sharing the z's and t.
DuplicatedSystem duplicate_triple(const std::vector<MultiPoly>& polys, int n, int k, const Rational& a,
                                  VarTablePtr source_table, const std::string& x_name);

struct DeformationParams {
  std::vector<int> m;  // the >= k clearing exponents of the original system
  long M = 0;
  long beta = 0;
  long alpha = 0;
  int n = 0;
  int k = 1;
  std::string note;  // records F_i(t^alpha, u) = G_i(t, u, 0)
};

// The symbolic deformation: t -> t^alpha inside Q_i plus the
// t*eps^k * sum_j gamma_{i,j} D^k G_j term, gamma_{i,i} = i^k and
// gamma_{i,j} = t^beta off the diagonal. Requires a = 0 (shift first).
std::pair<DdeSystem, DeformationParams> build_deformed_system(const DdeSystem& sys);

// The Lemma-4 leading-term identity of the deformed kernel determinant:
// Det(u) = u^{M-nk} * prod_{j=1..n} (-u^k + t eps^k j^k) mod t^{n+1},
// checked symbolically in u and eps. Returns the two sides on mismatch.
bool deformed_det_identity_holds(const DdeSystem& deformed, const DeformationParams& params,
                                 std::string* mismatch = nullptr);

}  // namespace dde
