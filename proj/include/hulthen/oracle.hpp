#pragma once

// Independent eigenvalue oracle: direct shooting on the reduced radial
// equation g'' = -k^2(r, E) g with
//
//   relativistic      k^2 = [E - V(r)]^2 - [m(r) + S(r)]^2
//                           - (D+2l-1)(D+2l-3) T(r) / 4
//   nonrelativistic   k^2 = 2 m0 [E - 2 V(r)] - l(l+1) T(r)
//
// where T is either the exact barrier 1/r^2 or its screened approximation.
// Nothing here reuses the closed-form algebra: the integrator consumes only
// the potential/mass/barrier profiles, a power-series start at r_min, and an
// energy-dependent decaying tail condition g'(r_max) = -kappa_inf(E) g.
// Eigenvalues are localised by node counting and a scaled Wronskian
// mismatch between the outward and inward sweeps.
//
// The mesh is fixed and deterministic but graded: logarithmic spacing from
// r_min up to about one screening length, uniform beyond.  A fourth-order
// Runge-Kutta step advances (g, g') segment by segment with the potential
// sampled once per grid at nodes and midpoints.

#include "hulthen/model.hpp"

#include <utility>
#include <vector>

namespace hulthen {

enum class OracleMode {
  approximated_centrifugal,     // relativistic, screened barrier
  exact_centrifugal,            // relativistic, exact 1/r^2 barrier
  nonrelativistic_exact,        // Schrodinger limit, exact barrier
  nonrelativistic_approximated, // Schrodinger limit, screened barrier
};

struct OracleConfig {
  OracleMode mode = OracleMode::approximated_centrifugal;
  SchemeSelector scheme;   // consumed by the approximated modes
  double r_min = 0.0;      // 0 selects 1e-6 / alpha
  double r_max = 0.0;      // 0 selects max(50/alpha, tail auto-extension)
  int grid_points = 20001; // >= 1001
  // energy search window; equal endpoints select the full-scan default
  std::pair<double, double> e_bracket{0.0, 0.0};
  double e_tolerance = 1e-10;
};

struct OracleEigenvalue {
  double energy = 0.0;
  int node_count = 0;
  double matching_residual = 0.0; // scaled Wronskian at the match point
  bool converged = false;
};

// Local squared wavenumber, evaluated from the closed-form profiles (not
// the grid).  Throws DomainError for r <= 0.
double effective_wavenumber_sq(double r, double energy,
                               const ValidatedProblem& problem,
                               const OracleConfig& config);

// One outward+inward sweep at a trial energy.  mismatch is the scaled
// Wronskian of the two solutions at the match point (zero at an
// eigenvalue); node_count counts sign changes of the outward solution up
// to the matching region.  Throws IntegrationBlowup if the sweep loses
// finiteness despite rescaling.
struct ShootResult {
  double mismatch = 0.0;
  int node_count = 0;
};
ShootResult shoot(const ValidatedProblem& problem, const OracleConfig& config,
                  double energy);

// Finds the eigenvalue whose outward solution carries target_nodes sign
// changes inside the configured bracket.  Handles simple roots (Wronskian
// sign change), eigenvalues sitting on a node-count boundary, coalesced
// double roots (|W| minimum without sign change) and threshold roots at
// the bracket edge.  Throws NotFoundInBracket when the bracket holds no
// such state.
OracleEigenvalue find_eigenvalue(const ValidatedProblem& problem,
                                 const OracleConfig& config, int target_nodes);

// Nonrelativistic benchmark of the two closed-form barrier treatments
// against the exact-barrier oracle, one row per screening parameter.
// Requires l >= 1 (the barrier approximation is inert at l = 0).
struct BenchmarkRow {
  double alpha = 0.0;
  double e_exact = 0.0;     // exact-barrier oracle eigenvalue
  double e_shifted = 0.0;   // closed form, slope-matched shift
  double e_unshifted = 0.0; // closed form, plain screened barrier
  double err_shifted = 0.0;
  double err_unshifted = 0.0;
};
std::vector<BenchmarkRow> approximation_benchmark(double v0,
                                                  const MassSpec& mass, int n,
                                                  int l,
                                                  const std::vector<double>& alphas,
                                                  int grid_points = 20001);

} // namespace hulthen
