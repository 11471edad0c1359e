#include "dde/guess.hpp"

#include <algorithm>

#include "dde/division.hpp"

namespace dde {

VarTablePtr guess_table() {
  static VarTablePtr table = VarTable::make({"t", "z0"});
  return table;
}

namespace {

// Exact kernel vector of an integer matrix via fraction-free (Bareiss)
// forward elimination, pivoting on the smallest nonzero pivot by bit size.
std::optional<std::vector<Rational>> kernel_vector(std::vector<std::vector<Integer>> m, size_t cols) {
  size_t rows = m.size();
  std::vector<size_t> pivot_col;
  Integer prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t best = rows;
    for (size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (best == rows || m[i][c].bit_size() < m[best][c].bit_size()) best = i;
    }
    if (best == rows) continue;  // free column
    std::swap(m[r], m[best]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = Integer::divexact(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = Integer(0);
    }
    prev = m[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() == cols) return std::nullopt;

  // First free column gets 1; back-substitute through the echelon rows.
  size_t free_col = 0;
  {
    std::vector<char> is_pivot(cols, 0);
    for (size_t c : pivot_col) is_pivot[c] = 1;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
  }
  std::vector<Rational> x(cols, Rational(0));
  x[free_col] = Rational(1);
  for (size_t i = pivot_col.size(); i-- > 0;) {
    size_t pc = pivot_col[i];
    Rational acc(0);
    for (size_t j = pc + 1; j < cols; ++j) {
      if (x[j].is_zero() || m[i][j].is_zero()) continue;
      acc += x[j] * Rational(m[i][j]);
    }
    x[pc] = -acc / Rational(m[i][pc]);
  }
  return x;
}

std::optional<MultiPoly> guess_at(const TSeries& G, int dt, int dz, size_t N) {
  // Columns (i, j) <-> t^j z0^i; rows are the first N t-orders of R(t, G).
  std::vector<TSeries> gpow(static_cast<size_t>(dz) + 1);
  gpow[0] = TSeries::constant(Rational(1), N);
  for (int i = 1; i <= dz; ++i) gpow[static_cast<size_t>(i)] = gpow[static_cast<size_t>(i - 1)] * G.truncated(N);

  size_t cols = static_cast<size_t>(dt + 1) * static_cast<size_t>(dz + 1);
  std::vector<std::vector<Rational>> rowsq(N, std::vector<Rational>(cols, Rational(0)));
  for (int i = 0; i <= dz; ++i)
    for (int j = 0; j <= dt; ++j) {
      size_t col = static_cast<size_t>(i) * (dt + 1) + static_cast<size_t>(j);
      for (size_t rr = static_cast<size_t>(j); rr < N; ++rr)
        rowsq[rr][col] = gpow[static_cast<size_t>(i)][rr - static_cast<size_t>(j)];
    }
  // Clear denominators rowwise to integers.
  std::vector<std::vector<Integer>> m(N, std::vector<Integer>(cols));
  for (size_t rr = 0; rr < N; ++rr) {
    Integer lcm(1);
    for (const auto& q : rowsq[rr]) {
      Integer d = q.denominator();
      lcm = Integer::divexact(lcm * d, Integer::gcd(lcm, d));
    }
    for (size_t c = 0; c < cols; ++c) {
      const Rational& q = rowsq[rr][c];
      m[rr][c] = q.numerator() * Integer::divexact(lcm, q.denominator());
    }
  }
  auto x = kernel_vector(std::move(m), cols);
  if (!x) return std::nullopt;

  auto table = guess_table();
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i <= dz; ++i)
    for (int j = 0; j <= dt; ++j) {
      const Rational& c = (*x)[static_cast<size_t>(i) * (dt + 1) + static_cast<size_t>(j)];
      if (c.is_zero()) continue;
      Monomial mono(2, 0);
      mono[0] = static_cast<Exponent>(j);
      mono[1] = static_cast<Exponent>(i);
      terms.push_back({std::move(mono), c});
    }
  if (terms.empty()) return std::nullopt;
  MultiPoly R = MultiPoly::from_terms(table, std::move(terms), MonomialOrder::degrevlex(2)).normalized();
  return R;
}

}  // namespace

std::optional<MultiPoly> guess_annihilator(const GuessSpec& spec) {
  if (spec.margin < 10) throw StructuralError("guess_annihilator: margin must be >= 10");
  size_t need = static_cast<size_t>(spec.deg_t + 1) * static_cast<size_t>(spec.deg_z + 1) +
                static_cast<size_t>(spec.margin);
  if (spec.series.order() < need)
    throw PrecisionError("guess_annihilator: series order " + std::to_string(spec.series.order()) +
                         " below required " + std::to_string(need));
  size_t N = spec.series.order();
  for (int dz = 0; dz <= spec.deg_z; ++dz)
    for (int dt = 0; dt <= spec.deg_t; ++dt) {
      auto R = guess_at(spec.series, dt, dz, N);
      if (R) return R;
    }
  return std::nullopt;
}

VerifyOutcome verify_annihilator(const MultiPoly& R, const TSeries& series, size_t N) {
  if (R.is_zero()) throw StructuralError("verify_annihilator: zero polynomial");
  if (series.order() < N)
    throw PrecisionError("verify_annihilator: series order below the requested check order");
  size_t tv = R.table()->index_of("t");
  size_t zv = R.table()->index_of("z0");
  // Horner in z0 with truncated series coefficients.
  long dz = R.degree_in(zv);
  std::vector<TSeries> coef(static_cast<size_t>(dz) + 1, TSeries(N));
  for (const auto& term : R.terms()) {
    Exponent te = term.mono[tv];
    if (te < N) coef[term.mono[zv]].at(te) += term.coeff;
  }
  TSeries acc(N);
  TSeries G = series.truncated(N);
  for (long i = dz; i >= 0; --i) acc = acc * G + coef[static_cast<size_t>(i)];
  VerifyOutcome out;
  out.checked_to = N;
  size_t v = acc.valuation();
  if (v >= N) {
    out.ok = true;
  } else {
    out.ok = false;
    out.first_failing = v;
    out.failing_coefficient = acc[v];
  }
  return out;
}

MinimalAnnihilator minimal_annihilator(const MultiPoly& R_eliminated, const TSeries& series) {
  MultiPoly R = R_eliminated.on_table(guess_table()).normalized();
  size_t N = series.order();
  VerifyOutcome base = verify_annihilator(R, series, N);
  if (!base.ok)
    throw StructuralError("minimal_annihilator: R_eliminated fails its own series check at order " +
                          std::to_string(base.first_failing));

  size_t tv = 0, zv = 1;
  long Rt = R.degree_in(tv), Rz = R.degree_in(zv);
  const int margin = 10;
  for (long dz = 1; dz <= Rz; ++dz) {
    for (long dt = 1; dt <= Rt; ++dt) {
      size_t need = static_cast<size_t>(dt + 1) * static_cast<size_t>(dz + 1) + margin;
      if (need > N) break;
      auto cand = guess_at(series, static_cast<int>(dt), static_cast<int>(dz), N);
      if (!cand) continue;
      if (*cand == R) {
        MinimalAnnihilator out;
        out.poly = R;
        out.is_minimal = true;
        out.quotient = MultiPoly::constant(guess_table(), Rational(1));
        out.verified_to = N;
        return out;
      }
      auto q = exact_divide(R, *cand);
      if (!q) continue;
      if (!verify_annihilator(*cand, series, N).ok) continue;
      MinimalAnnihilator out;
      out.poly = cand->normalized();
      out.is_minimal = true;
      out.quotient = std::move(*q);
      out.verified_to = N;
      return out;
    }
  }
  MinimalAnnihilator out;
  out.poly = R;
  out.is_minimal = false;
  out.quotient = MultiPoly::constant(guess_table(), Rational(1));
  out.verified_to = N;
  return out;
}

}  // namespace dde
