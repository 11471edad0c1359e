#pragma once

#include <iosfwd>
#include <limits>
#include <set>
#include <vector>

#include "dde/multipoly.hpp"

namespace dde {

// Generating set of an ideal with its active monomial order. Generators are
// nonzero and canonicalized (integer content cleared, positive leading
// coefficient).
struct IdealPresentation {
  VarTablePtr table;
  MonomialOrder order = MonomialOrder::degrevlex(0);
  std::vector<MultiPoly> gens;

  static IdealPresentation make(VarTablePtr table, MonomialOrder order, std::vector<MultiPoly> gens);
  IdealPresentation with_order(MonomialOrder new_order) const;
};

struct GroebnerBasis {
  IdealPresentation pres;        // the reduced basis, sorted ascending by lm
  bool minimal_reduced = false;  // true when fully interreduced
};

enum class GBStatus { ok, budget_exhausted };

struct GBBudget {
  size_t max_pairs = std::numeric_limits<size_t>::max();   // S-pair reductions
  size_t max_basis = std::numeric_limits<size_t>::max();   // basis elements
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct GBStats {
  size_t pairs_processed = 0;
  size_t reductions_to_zero = 0;
  size_t basis_size = 0;
  size_t max_term_count = 0;
  double seconds = 0.0;
};

struct GBResult {
  GBStatus status = GBStatus::ok;
  GroebnerBasis basis;
  GBStats stats;
};

struct GBOptions {
  GBBudget budget;
  // Factors stripped from every reduced S-polynomial before it joins the
  // basis. Sound for saturation-style solves (the computed ideal sits
  // between the input and its saturation by the product); outputs are
  // series-verified downstream.
  std::vector<MultiPoly> divide_out;
  std::ostream* trace = nullptr;  // pair/basis progress log
};

// Reduced Groebner basis under the presentation's order. Deterministic:
// Gebauer-Moeller pair pruning with sugar-degree selection and index
// tie-breaks. On budget exhaustion returns the partial basis with
// status = budget_exhausted.
GBResult buchberger(const IdealPresentation& gens, const GBOptions& opts = {});

// Generators of gens : g^infinity, via a Rabinowitsch variable in a leading
// block that is then intersected away. Result lives on the original table.
GBResult saturate(const IdealPresentation& gens, const MultiPoly& g, const GBOptions& opts = {});

// Generators of the elimination ideal keeping only the given variables,
// via the block order {eliminated} > {keep}. A zero presentation (no
// generators) means the elimination ideal is {0} to the engine's knowledge.
GBResult eliminate(const IdealPresentation& gens, const std::set<size_t>& keep, const GBOptions& opts = {});

// Elements of a computed basis free of all variables outside `keep`.
std::vector<MultiPoly> elimination_part(const GroebnerBasis& gb, const std::set<size_t>& keep);

// Finiteness criterion over K(params): true iff for every non-parameter
// variable some basis leading monomial is a pure power of it (projected to
// the non-parameter variables). The unit ideal counts as zero-dimensional.
bool is_zero_dimensional(const GroebnerBasis& gb, const std::set<size_t>& params);

}  // namespace dde
