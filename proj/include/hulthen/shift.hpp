#pragma once

// Improved screened approximation of the centrifugal barrier.
//
// The exact barrier 1/r^2 is replaced near the potential range by
//
//     1/r^2  ~=  alpha^2 * [ c0 + exp(-alpha r) / (1 - exp(-alpha r))^2 ]
//
// which shares the Hulthen shape and therefore keeps the radial equation
// solvable in closed form.  The constant c0 is fixed by requiring the
// approximation to reproduce the value of 1/r^2 at the matching radius
// r = gamma/alpha.  An additional exact slope match is impossible (the
// slope equation has no positive root; see solve_shift_parameters), so
// gamma itself is the scheme's conventional matching point and only the
// value condition is enforced.  c0 = 0 recovers the classic unshifted
// (Greene-Aldrich style) approximation.

#include "hulthen/model.hpp"

#include <vector>

namespace hulthen {

struct ShiftParameters {
  double gamma_match = 0.0; // dimensionless matching point (alpha * r)
  double c0 = 0.0;          // additive shift constant
};

// Residual of the slope-matching condition at dimensionless x = alpha*r:
//   x^3 * [ 1/(e^x - 1) + 3/(e^x - 1)^2 + 2/(e^x - 1)^3 ] - 2
// Strictly negative for every x > 0 (the left term is 2 - x^4/120 + ...),
// so this residual has no root; it is exposed to quantify the structural
// slope deficit of the scheme, about -5.07e-4 at gamma_match.
double shift_slope_condition(double x);

// Residual of the value-matching condition given a candidate (x, c0):
//   x^2 * [ c0 + e^x/(e^x - 1)^2 ] - 1
double shift_value_condition(double x, double c0);

// Produces the scheme constants: the conventional matching point
// gamma_match = 0.4990429999 and c0 from the value condition there.
// tolerance must lie in (0, 1e-8] and bounds the verified value-condition
// residual.  Throws InvalidInput for a bad tolerance and NoConvergence if
// the residual check fails (not expected on IEEE-754 doubles).
ShiftParameters solve_shift_parameters(double tolerance = 1e-12);

// Cached constants (tolerance 1e-14), used wherever a scheme requests the
// matched shift.
const ShiftParameters& matched_shift_parameters();

// Numeric shift constant selected by a scheme.
double resolve_c0(const SchemeSelector& scheme);

// Exact barrier profile 1/r^2.  Throws DomainError for r <= 0.
double centrifugal_exact(double r);

// Screened barrier profile alpha^2 [c0 + e^{-alpha r}/(1-e^{-alpha r})^2].
// Overflow-safe for large alpha*r (the screened term underflows to c0).
// Throws DomainError for r <= 0 and InvalidInput for alpha <= 0.
double centrifugal_approx(double r, double alpha, const SchemeSelector& scheme);

struct ErrorProfileSample {
  double r = 0.0;
  double exact = 0.0;
  double approx = 0.0;
  double relative_error = 0.0; // (approx - exact) / exact
};

// Samples both barrier profiles on a uniform grid of `samples` points over
// [r_min, r_max] (inclusive endpoints).  Requires samples >= 2 and
// 0 < r_min < r_max.
std::vector<ErrorProfileSample> approximation_error_profile(
    double alpha, double r_min, double r_max, int samples,
    const SchemeSelector& scheme);

} // namespace hulthen
