#pragma once

#include <string>
#include <vector>

#include "dde/series.hpp"

namespace dde {

// Outcome of the Newton-polygon analysis of a polynomial in u with truncated
// t-series coefficients: how many roots U(t) of strictly positive valuation
// it has, with leading-order distinctness when certifiable.
struct PuiseuxDiagnostic {
  enum class Distinctness { confirmed, inconclusive };

  struct Segment {
    Rational valuation;   // common t-valuation of the roots of this segment
    int width;            // number of roots carried (with multiplicity)
    int char_degree;      // degree of the characteristic coefficient equation
    bool char_squarefree;
  };

  int root_count = 0;
  std::vector<Segment> leading_terms;
  Distinctness distinctness = Distinctness::inconclusive;

  std::string str() const;
};

// Counts the solutions u = U(t), val(U) > 0, of D(u) = 0 via the Newton
// polygon of D (lower hull of (u-degree, t-valuation) points). Distinctness
// is confirmed when every segment's characteristic equation is squarefree;
// beyond leading order the diagnostic stays inconclusive. Throws
// PrecisionError when every coefficient vanishes to the truncation order or
// the series carries less than min_precision orders.
PuiseuxDiagnostic newton_root_count(const USeries& D, size_t min_precision);

}  // namespace dde
