#pragma once

// Adaptive Gauss-Kronrod (G7, K15) quadrature on a finite interval.
// Bisects the worst panel until the summed K15-G7 error estimate meets the
// requested tolerance.  Plenty for the smooth, exponentially-decaying
// integrands produced by the wavefunction module.

#include <functional>

namespace hulthen {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

// Integrates f over [a, b] until |error| <= max(abs_tol, rel_tol*|value|)
// or the panel budget is exhausted (the result then carries the achieved
// estimate; callers decide whether that is acceptable).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-10,
                           double abs_tol = 1e-14, int max_panels = 4000);

} // namespace hulthen
