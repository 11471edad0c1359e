#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <vector>

#include "dde/multipoly.hpp"

namespace dde {

class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

struct ResultantElimOptions {
  // Duplicated kernel-root variables u_1..u_{nk}; enables the
  // divided-difference augmentation and the stripping of (u_i - u_j),
  // (u_i - a) and u-power factors, which mirrors the saturation polynomial.
  std::vector<size_t> u_family;
  Rational catalytic_a;
  std::optional<size_t> t_var;       // powers of t are stripped when set
  std::set<size_t> shared_vars;      // eliminated variables common to all copies (the z's)
  size_t max_partners = 10;          // resultant partners per pivot
  size_t max_terms = 500000;         // per-polynomial size guard
  std::ostream* trace = nullptr;
};

// Cascade of resultants eliminating the given variables in order, keeping
// only polynomials in `keep`. Output polynomials lie in the ideal generated
// by `gens` extended by the divided-difference identities of a duplicated
// system, i.e. they vanish on every solution with pairwise-distinct kernel
// roots; they may be proper multiples of the true eliminant and must be
// verified against series downstream. Candidates come back smallest first.
std::vector<MultiPoly> iterated_resultant_eliminate_all(std::vector<MultiPoly> gens,
                                                        const std::vector<size_t>& eliminate_order,
                                                        const std::set<size_t>& keep,
                                                        const ResultantElimOptions& opts = {});

// The best candidate from the cascade; throws DegeneracyError when every
// resultant vanishes at some stage or nothing survives in the kept
// variables.
MultiPoly iterated_resultant_eliminate(std::vector<MultiPoly> gens, const std::vector<size_t>& eliminate_order,
                                       const std::set<size_t>& keep, const ResultantElimOptions& opts = {});

}  // namespace dde
