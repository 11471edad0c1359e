#include "dde/newton.hpp"

#include <numeric>
#include <sstream>

namespace dde {

std::string PuiseuxDiagnostic::str() const {
  std::ostringstream os;
  os << root_count << " root(s) of positive valuation";
  if (!leading_terms.empty()) {
    os << " [";
    for (size_t i = 0; i < leading_terms.size(); ++i) {
      if (i) os << ", ";
      os << leading_terms[i].width << " of valuation " << leading_terms[i].valuation.str();
    }
    os << "]";
  }
  os << "; distinctness "
     << (distinctness == Distinctness::confirmed ? "confirmed" : "inconclusive");
  return os.str();
}

PuiseuxDiagnostic newton_root_count(const USeries& D, size_t min_precision) {
  if (D.order() < min_precision)
    throw PrecisionError("newton_root_count: series truncated below the requested precision");

  // Point (j, v_j): u-degree j, t-valuation of the u^j coefficient series.
  long udeg = D.max_u_degree();
  if (udeg < 0) throw PrecisionError("newton_root_count: all coefficients vanish to precision");
  struct Pt {
    long j;
    size_t val;
    Rational lead;  // coefficient of t^val u^j
  };
  std::vector<Pt> pts;
  for (long j = 0; j <= udeg; ++j) {
    for (size_t m = 0; m < D.order(); ++m) {
      const Rational& c = D.coeff(m)[static_cast<size_t>(j)];
      if (!c.is_zero()) {
        pts.push_back({j, m, c});
        break;
      }
    }
  }
  if (pts.empty()) throw PrecisionError("newton_root_count: all coefficients vanish to precision");

  // Lower convex hull from the smallest u-degree upward.
  std::vector<size_t> hull;  // indices into pts
  for (size_t i = 0; i < pts.size(); ++i) {
    while (hull.size() >= 2) {
      const Pt& a = pts[hull[hull.size() - 2]];
      const Pt& b = pts[hull.back()];
      const Pt& c = pts[i];
      // keep b only if it lies strictly below segment a-c
      long lhs = (static_cast<long>(b.val) - static_cast<long>(a.val)) * (c.j - a.j);
      long rhs = (static_cast<long>(c.val) - static_cast<long>(a.val)) * (b.j - a.j);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }

  PuiseuxDiagnostic diag;
  diag.distinctness = PuiseuxDiagnostic::Distinctness::confirmed;
  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    const Pt& a = pts[hull[s]];
    const Pt& b = pts[hull[s + 1]];
    if (b.val >= a.val) continue;  // only downward segments carry val > 0 roots
    long width = b.j - a.j;
    long drop = static_cast<long>(a.val) - static_cast<long>(b.val);
    long g = std::gcd(width, drop);
    long q = width / g;  // valuation = drop/width = (drop/g)/(q)
    // Characteristic equation: points of the polygon on this segment spaced
    // by q in u-degree; its roots are the q-th powers of the leading
    // coefficients of the segment's Puiseux branches.
    std::vector<Rational> phi(static_cast<size_t>(width / q) + 1, Rational(0));
    for (const Pt& p : pts) {
      if (p.j < a.j || p.j > b.j) continue;
      // on the segment: (p.val - a.val)*(b.j - a.j) == (p.j - a.j)*(b.val - a.val)
      long lhs = (static_cast<long>(p.val) - static_cast<long>(a.val)) * width;
      long rhs = (p.j - a.j) * (-drop);
      if (lhs != rhs) continue;
      if ((p.j - a.j) % q != 0) continue;
      phi[static_cast<size_t>((p.j - a.j) / q)] = p.lead;
    }
    UPoly char_poly = UPoly::from_coeffs(phi);
    bool sqfree = false;
    if (!char_poly.is_zero()) {
      UPoly g2 = UPoly::gcd(char_poly, char_poly.derivative());
      sqfree = g2.degree() <= 0;
    }
    PuiseuxDiagnostic::Segment seg;
    seg.valuation = Rational(drop, width);
    seg.width = static_cast<int>(width);
    seg.char_degree = static_cast<int>(char_poly.degree());
    seg.char_squarefree = sqfree;
    if (!sqfree) diag.distinctness = PuiseuxDiagnostic::Distinctness::inconclusive;
    diag.root_count += seg.width;
    diag.leading_terms.push_back(std::move(seg));
  }
  if (diag.leading_terms.empty()) diag.distinctness = PuiseuxDiagnostic::Distinctness::confirmed;
  return diag;
}

}  // namespace dde
