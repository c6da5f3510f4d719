#pragma once

// Radial wavefunctions for the closed-form spectrum.
//
// In the variable z = exp(-alpha r) the reduced solution g = r^{(D-1)/2} R
// factorises as
//
//     g(r) ~ z^epsilon (1 - z)^delta P_n^{(2 epsilon, 2 delta - 1)}(1 - 2z)
//
// with epsilon = sqrt(m0^2 + delta_e - E^2)/alpha and delta from the
// spectrum intermediates.  P is a Jacobi polynomial; this header also
// exposes the polynomial evaluators and the terminating-hypergeometric
// identity used to cross-check them.

#include "hulthen/model.hpp"
#include "hulthen/spectrum.hpp"

#include <utility>
#include <vector>

namespace hulthen {

struct JacobiParams {
  int degree = 0;
  double a = 0.0; // first index, > -1
  double b = 0.0; // second index, > -1
};

// Three-term-recurrence evaluation of P_n^{(a,b)}(x) for x in [-1, 1].
// Throws DomainError outside [-1, 1] and InvalidInput for bad indices.
double jacobi_eval(const JacobiParams& params, double x);

// Independent finite-sum evaluation (binomial form, extended-precision
// accumulation); same domain contract.  Used as the oracle for the
// recurrence.
double jacobi_series_eval(const JacobiParams& params, double x);

// Evaluates the identity
//   P_n^{(a,b)}(1 - 2z) = C(n+a, n) * 2F1(-n, n+a+b+1; a+1; z)
// and reports both sides plus their ratio (which must equal C(n+a, n)
// independent of z).
struct HypergeometricCheck {
  double jacobi_value = 0.0;
  double hypergeometric_value = 0.0;
  double ratio = 0.0;
};
HypergeometricCheck hypergeometric_form_check(const JacobiParams& params,
                                              double z);

enum class Branch { plus, minus };

// A fully assembled, normalised radial wavefunction R_l(r) for one energy
// branch.  Normalisation: integral of R^2 r^{D-1} dr over (0, inf) equals 1.
struct RadialWavefunction {
  ValidatedProblem problem;
  SchemeSelector scheme;
  Branch branch = Branch::plus;
  double energy = 0.0;
  double epsilon = 0.0; // > 0 for a bound, normalisable state
  double delta = 0.0;
  JacobiParams jacobi;
  double norm = 0.0; // multiplicative normalisation constant, > 0

  // Evaluates R(r).  Assembled in log space once epsilon*alpha*r > 30 so the
  // far tail keeps its relative accuracy.  Throws DomainError for r <= 0.
  double operator()(double r) const;
};

// Builds the wavefunction for the requested branch of the closed-form
// spectrum.  Throws NotBound when the spectrum has no real pair or when the
// branch energy gives epsilon <= 0 (non-normalisable threshold state).
RadialWavefunction radial_wavefunction(const ValidatedProblem& problem,
                                       const SchemeSelector& scheme,
                                       Branch branch);

// Evaluates R at each radius (all must be > 0); returns (r, R) pairs.
std::vector<std::pair<double, double>> sample_wavefunction(
    const RadialWavefunction& wf, const std::vector<double>& radii);

} // namespace hulthen
