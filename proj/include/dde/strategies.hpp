#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dde/guess.hpp"
#include "dde/ideal.hpp"
#include "dde/newton.hpp"
#include "dde/numerator_system.hpp"

namespace dde {

struct TriState {
  enum Value { confirmed, refuted, inconclusive, assumed } value = inconclusive;
  std::string evidence;

  static TriState make(Value v, std::string ev = "") { return {v, std::move(ev)}; }
  const char* str() const {
    switch (value) {
      case confirmed: return "confirmed";
      case refuted: return "refuted";
      case assumed: return "assumed";
      default: return "inconclusive";
    }
  }
};

struct HypothesisReport {
  int nk = 0;
  int h1_roots_found = -1;
  int h2_roots_found = -1;
  TriState h1_root_count;
  TriState h1_distinct;
  TriState h1_zero_dimensional;
  TriState h2_root_count;
  TriState h2_zero_dimensional;
  TriState principal;
  TriState hypothesis_p;  // never auto-confirmed
  bool degenerate_no_z = false;
  std::string note;
};

struct SolveBudget {
  double reduce_seconds = 60.0;     // reduction attempts
  double gb_seconds = 1800.0;       // duplication Groebner runs
  size_t gb_max_pairs = 2000000;
  size_t gb_max_basis = 20000;
  size_t series_order = 0;          // 0 = automatic
  bool enable_divide_out = true;    // accelerator between the honest GB and resultants
  bool enable_resultant_fallback = true;
  std::ostream* trace = nullptr;
};

struct SolveTimings {
  double expand_seconds = 0;
  double construct_seconds = 0;
  double eliminate_seconds = 0;
  double verify_seconds = 0;
  double total_seconds = 0;
};

struct AnnihilatorResult {
  MultiPoly R;  // on the table [t, z0]
  std::string strategy;  // duplication | reduction | guess | degenerate
  std::string engine;    // groebner | groebner-divide-out | resultants | substitution | guess
  size_t verified_to_order = 0;
  std::optional<MultiPoly> minimal_factor;
  bool minimal_certified = false;  // via the Prop-12 degree bound; else conjectural
  HypothesisReport diagnostics;
  SolveTimings timings;
};

struct SolveFailure {
  enum class Kind { hypothesis_refuted, budget_exhausted, degeneracy } kind;
  std::string message;
  HypothesisReport diagnostics;
};

using SolveOutcome = std::variant<AnnihilatorResult, SolveFailure>;

inline bool solved(const SolveOutcome& o) { return std::holds_alternative<AnnihilatorResult>(o); }

// Algorithm 1: duplicate nk times, saturate, eliminate down to Q[t, z0],
// series-verify, extract the minimal factor. Diagnostics run first; a
// refuted H1 aborts with a report suggesting the deformation, except in the
// degenerate case where no z-variable occurs (solved by substitution).
SolveOutcome solve_by_duplication(const DdeSystem& sys, const SolveBudget& budget = {});

struct ReduceOutcome {
  bool principal = false;
  GBStatus status = GBStatus::ok;
  std::optional<MultiPoly> E;        // on the numerator-system table, x2..xn eliminated
  std::vector<MultiPoly> basis;      // the elimination basis when not principal
  NumeratorSystem ns;
};

// Saturates <E_1..E_n> by Det, eliminates x_2..x_n and tests principality of
// the result (after clearing t-content). n >= 2.
ReduceOutcome reduce_to_single_equation(const DdeSystem& sys, const SolveBudget& budget = {});

// The reduction strategy: single equation E, H2 root-count gate, then the
// duplicated (E, dE/dx1, dE/du) solve. H2 failures come back as structured
// hypothesis_refuted outcomes (the documented failure mode).
SolveOutcome solve_by_reduction(const DdeSystem& sys, const SolveBudget& budget = {});

// Guess-and-verify on F_1(t, a) with growing degree bounds; results are
// conjectural unless the Prop-12 bound certifies them.
SolveOutcome solve_by_guess(const DdeSystem& sys, const SolveBudget& budget = {});

// Reduction first (fast H2 pre-check), duplication on failure, guessing as
// the last resort.
SolveOutcome solve_auto(const DdeSystem& sys, const SolveBudget& budget = {});

HypothesisReport check_hypotheses(const DdeSystem& sys, const SolveBudget& budget = {});

// Degree bounds, evaluated exactly (floor when the division is inexact).
Integer degree_bound_thm2_full(int n, int k, long delta);
Integer degree_bound_thm2_specialized(int n, int k, long delta);
Integer degree_bound_duplication(int n, int k, long delta);

struct CompareVerdict {
  bool divides = false;
  MultiPoly sqfree_r1;
  MultiPoly sqfree_r2;
  MultiPoly quotient;  // sqfree_r1 / sqfree_r2 when divides
};

// Prop-17 check: SqFreePart(R2) | SqFreePart(R1), with a quotient witness.
CompareVerdict compare_strategies(const AnnihilatorResult& r1, const AnnihilatorResult& r2);

}  // namespace dde
