#pragma once

#include <optional>

#include "dde/multipoly.hpp"
#include "dde/series.hpp"

namespace dde {

// Bivariate annihilator guessing from truncated series data, by exact linear
// algebra over Q. Guessed polynomials live on the table [t, z0].
struct GuessSpec {
  TSeries series;
  int deg_t = 0;
  int deg_z = 0;
  int margin = 10;  // extra verified orders beyond (deg_t+1)(deg_z+1)
};

VarTablePtr guess_table();

// The nonzero R with deg_t <= D_t, deg_z0 <= D_z of minimal (D_z, then D_t)
// such that R(t, G(t)) = 0 mod t^N, or nullopt when no candidate exists
// within the bounds. Requires series order >= (D_t+1)(D_z+1) + margin
// (margin >= 10); PrecisionError otherwise.
std::optional<MultiPoly> guess_annihilator(const GuessSpec& spec);

struct VerifyOutcome {
  bool ok = false;
  size_t checked_to = 0;        // orders verified
  size_t first_failing = 0;     // valid when !ok
  Rational failing_coefficient; // valid when !ok
};

// Checks R(t, series) = 0 mod t^N; on failure reports the first nonzero
// order and its coefficient.
VerifyOutcome verify_annihilator(const MultiPoly& R, const TSeries& series, size_t N);

struct MinimalAnnihilator {
  MultiPoly poly;          // the minimal verified divisor, or R_eliminated itself
  bool is_minimal = false; // false when the search found no dividing candidate
  MultiPoly quotient;      // R_eliminated / poly when is_minimal
  size_t verified_to = 0;
};

// Extracts the minimal annihilator from an eliminated R by guessing with
// increasing bounds; accepted candidates must divide R_eliminated exactly and
// verify against the series. Falls back to R_eliminated flagged non-minimal.
MinimalAnnihilator minimal_annihilator(const MultiPoly& R_eliminated, const TSeries& series);

}  // namespace dde
