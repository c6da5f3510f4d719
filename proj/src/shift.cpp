#include "hulthen/shift.hpp"

#include <cmath>
#include <limits>

namespace hulthen {

namespace {

// e^{-x} / (1 - e^{-x})^2, the screened barrier shape without the shift.
// Equivalent to e^x / (e^x - 1)^2 but immune to e^x overflow; for x > 30
// the value has already decayed below 1e-13 so the direct form is used
// throughout in this guarded arrangement.
double screened_shape(double x) {
  const double em = std::exp(-x);
  const double d = 1.0 - em;
  return em / (d * d);
}

} // namespace

double shift_slope_condition(double x) {
  if (!(x > 0.0))
    throw DomainError("slope condition requires x > 0");
  // x^3 [ 1/(e^x-1) + 3/(e^x-1)^2 + 2/(e^x-1)^3 ] - 2, written via
  // t = 1/(e^x - 1) = e^{-x}/(1 - e^{-x}) to stay finite for large x.
  const double em = std::exp(-x);
  const double t = em / (1.0 - em);
  return x * x * x * (t * (1.0 + t * (3.0 + 2.0 * t))) - 2.0;
}

double shift_value_condition(double x, double c0) {
  if (!(x > 0.0))
    throw DomainError("value condition requires x > 0");
  return x * x * (c0 + screened_shape(x)) - 1.0;
}

// Matching point of the shifted approximation.  An exact simultaneous
// value + slope match does not exist: with u = e^x - 1 the slope equation
// x^3 [1/u + 3/u^2 + 2/u^3] = 2 has left side 2 - x^4/120 + O(x^6)
// (since e^x/(e^x-1)^2 = (1/4) csch^2(x/2) = 1/x^2 - 1/12 + x^2/240 - ...),
// strictly below 2 for every x > 0.  The scheme therefore fixes the
// conventional matching point below and determines c0 from the value
// match alone; the leftover slope mismatch there is about -5.07e-4,
// the x^4/120 deficit.
constexpr double k_gamma_match = 0.4990429999;

ShiftParameters solve_shift_parameters(double tolerance) {
  if (!std::isfinite(tolerance) || tolerance <= 0.0 || tolerance > 1e-8)
    throw InvalidInput("tolerance must lie in (0, 1e-8]");

  // value condition solved for c0 at the matching point:
  // c0 = 1/x^2 - e^{-x}/(1-e^{-x})^2
  ShiftParameters p;
  p.gamma_match = k_gamma_match;
  p.c0 = 1.0 / (k_gamma_match * k_gamma_match) - screened_shape(k_gamma_match);

  // c0 zeroes the value condition by construction; anything beyond a few
  // ulps signals a broken build (bad libm, fast-math reassociation).
  const double floor = 8.0 * std::numeric_limits<double>::epsilon();
  if (std::abs(shift_value_condition(p.gamma_match, p.c0)) >
      std::max(tolerance, floor))
    throw NoConvergence("value condition residual exceeds tolerance");
  return p;
}

const ShiftParameters& matched_shift_parameters() {
  static const ShiftParameters p = solve_shift_parameters(1e-14);
  return p;
}

double resolve_c0(const SchemeSelector& scheme) {
  switch (scheme.kind) {
    case ShiftKind::unshifted:
      return 0.0;
    case ShiftKind::matched:
      return matched_shift_parameters().c0;
    case ShiftKind::custom:
      if (!std::isfinite(scheme.custom_c0) || scheme.custom_c0 < 0.0)
        throw InvalidInput("custom shift constant must be finite and >= 0");
      return scheme.custom_c0;
  }
  throw InvalidInput("unknown shift scheme");
}

double centrifugal_exact(double r) {
  if (!(r > 0.0))
    throw DomainError("centrifugal_exact requires r > 0");
  return 1.0 / (r * r);
}

double centrifugal_approx(double r, double alpha, const SchemeSelector& scheme) {
  if (!(r > 0.0))
    throw DomainError("centrifugal_approx requires r > 0");
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw InvalidInput("centrifugal_approx requires alpha > 0");
  const double c0 = resolve_c0(scheme);
  const double x = alpha * r;
  // For x > 30 the screened term is below 1e-13 / r0^2; the e^{-x} form
  // decays gracefully to zero with no overflow, unlike e^x/(e^x-1)^2.
  return alpha * alpha * (c0 + screened_shape(x));
}

std::vector<ErrorProfileSample> approximation_error_profile(
    double alpha, double r_min, double r_max, int samples,
    const SchemeSelector& scheme) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw InvalidInput("error profile requires alpha > 0");
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || r_min <= 0.0 || r_max <= r_min)
    throw InvalidInput("error profile requires 0 < r_min < r_max");
  if (samples < 2)
    throw InvalidInput("error profile requires samples >= 2");

  std::vector<ErrorProfileSample> out;
  out.reserve(static_cast<size_t>(samples));
  const double step = (r_max - r_min) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    ErrorProfileSample s;
    s.r = (i == samples - 1) ? r_max : r_min + step * i;
    s.exact = centrifugal_exact(s.r);
    s.approx = centrifugal_approx(s.r, alpha, scheme);
    s.relative_error = (s.approx - s.exact) / s.exact;
    out.push_back(s);
  }
  return out;
}

} // namespace hulthen
