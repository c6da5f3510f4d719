#pragma once

// Closed-form bound-state energies of the D-dimensional Klein-Gordon
// equation with Hulthen vector/scalar couplings, a linear-in-shape mass
// perturbation, and the screened centrifugal approximation.
//
// With s_tilde = s0 - m1 and a chosen shift constant c0, the quantisation
// condition reduces to a quadratic in E whose two roots are
//
//   E(+,-) = (v0/2) B  +-  (kappa/2) sqrt(xi - B^2/4)
//
//   kappa = alpha(2n+1) + sqrt(4(s_tilde^2 - v0^2) + alpha^2 (D+2l-2)^2)
//   xi    = [4 m0^2 + alpha^2 (D+2l-1)(D+2l-3) c0] / (4 v0^2 + kappa^2)
//   B     = 1 - 4 s_tilde (s_tilde + 2 m0) / (4 v0^2 + kappa^2)
//
// A negative radicand inside kappa is a hard validity failure
// (ConstraintViolation); xi < B^2/4 merely means no real pair exists for
// that (n, l) and is reported as data, not as an error.

#include "hulthen/model.hpp"

#include <optional>
#include <vector>

namespace hulthen {

enum class SpectrumStatus { both_real, no_real_state };

enum class ConstraintId { none, kappa_discriminant, realness };

// Scalars shared by the energy formula, the residual check and the
// wavefunction assembly.  All fields except beta1/epsilon are independent
// of E.
struct SpectrumIntermediates {
  double q = 0.0;           // coupling scale; equals alpha in natural units
  double s_tilde = 0.0;     // s0 - m1
  double gamma_ang = 0.0;   // (D+2l-1)(D+2l-3)/4
  double kappa = 0.0;       // see header comment
  double xi = 0.0;
  double b_coeff = 0.0;     // B above
  double delta = 0.0;       // (1 + sqrt(1 + 4(beta2+beta3+gamma_ang)))/2
  double beta_jacobi = 0.0; // 2*delta - 1, second Jacobi index
  double delta_e = 0.0;     // alpha^2 (D+2l-1)(D+2l-3) c0 / 4, barrier shift
  double beta2 = 0.0;       // (s0^2 - v0^2)/alpha^2
  double beta3 = 0.0;       // m1(m1 - 2 s0)/alpha^2
  double beta4 = 0.0;       // 2 m0 m1 / alpha^2
  double v0 = 0.0;          // carried for the energy-dependent members
  double m0 = 0.0;

  // energy-dependent coupling beta1 = 2(E v0 + m0 s0)/alpha^2; the residual
  // rhs numerator is alpha^2 (beta1 - beta4 + beta2 + beta3)
  double beta1(double energy) const;
  // decay parameter sqrt(m0^2 + delta_e - E^2)/alpha (clamped at 0)
  double epsilon(double energy) const;
};

struct SpectrumResult {
  std::optional<double> e_plus;  // set iff status == both_real
  std::optional<double> e_minus; // set iff status == both_real
  SpectrumIntermediates intermediates;
  SpectrumStatus status = SpectrumStatus::no_real_state;
  ConstraintId violated = ConstraintId::none;

  bool both_real() const { return status == SpectrumStatus::both_real; }
};

// General evaluator, any D >= 1.  Throws ConstraintViolation when the
// kappa radicand is negative.
SpectrumResult energy_general(const ValidatedProblem& problem,
                              const SchemeSelector& scheme);

// Quantisation-condition residual at an arbitrary trial energy:
//   rhs(E) = [2(m0 s_tilde + E v0) + s_tilde^2 - v0^2] / (2 alpha^2 (n+delta))
//            - (n+delta)/2
//   residual(E) = rhs(E)^2 - (m0^2 + delta_e - E^2)/alpha^2
// residual vanishes at both closed-form roots; sign(rhs) classifies the
// root's branch.  Only +1 roots satisfy the unsquared condition rhs = +eps
// and are bound states of the integrated radial equation (node count n);
// -1 roots enter through the squaring step (conventionally read as the
// antiparticle branch) and are not eigenvalues of the equation as posed;
// 0 marks the binding threshold eps = 0.
struct ResidualReport {
  double residual = 0.0;
  double rhs = 0.0;
  int branch_sign = 0;
};
ResidualReport energy_equation_residual(const ValidatedProblem& problem,
                                        const SchemeSelector& scheme,
                                        double energy);

// ---- dedicated reduced forms (each must match energy_general to 1e-12) ---

// D = 1, l = 0 (the barrier term vanishes identically)
SpectrumResult energy_1d_swave(const PotentialSpec& potential,
                               const MassSpec& mass, int n);

// D = 1, l = 0, pure vector coupling (requires s_tilde == 0)
SpectrumResult energy_1d_pure_vector(const PotentialSpec& potential,
                                     const MassSpec& mass, int n);

// D = 1, l = 0, n = 0 ground state at the half-screening point v0 = alpha/2
// with s_tilde == 0:  E = (v0/2) (1 +- sqrt(2 m0^2/v0^2 - 1))
SpectrumResult energy_1d_ground_half_screening(const PotentialSpec& potential,
                                               const MassSpec& mass);

// pure scalar limit (v0 = 0 and s_tilde = 0, i.e. s0 = m1):
//   E(+,-) = +- sqrt(m0^2 - alpha^2 (n+1)^2 / 4)
SpectrumResult energy_pure_scalar(const MassSpec& mass, double alpha, int n);

// D = 3 reduced forms and their dispatcher
SpectrumResult energy_3d_lwave(const ValidatedProblem& problem,
                               const SchemeSelector& scheme);
SpectrumResult energy_3d_pure_vector(const ValidatedProblem& problem,
                                     const SchemeSelector& scheme);
SpectrumResult energy_3d_swave(const ValidatedProblem& problem,
                               const SchemeSelector& scheme);
SpectrumResult energy_3d(const ValidatedProblem& problem,
                         const SchemeSelector& scheme);

// Equal-coupling (S = V) residual written in the r0 = 1/alpha variables;
// vanishes at the roots of energy_general for s0 == v0.
double energy_equal_scalar_vector_residual(const ValidatedProblem& problem,
                                           const SchemeSelector& scheme,
                                           double energy);

// Nonrelativistic limit for equal couplings (requires s0 == v0):
//   E_nr = alpha^2 (D+2l-1)(D+2l-3) c0 / (8 m0)
//          - [((2 v0 - m1)(2 m0 - m1) - alpha^2 nu^2)/nu]^2 / (8 m0 alpha^2)
// with nu = n + delta_nr.  Throws DomainError when the delta_nr radicand is
// negative and InvalidInput when s0 != v0.
double energy_nonrelativistic(const ValidatedProblem& problem,
                              const SchemeSelector& scheme);

// Weak-coupling relativistic expansion around the nonrelativistic value:
//   E_r = m0 + E_nr + 2 (2 m0 - m1) [(2 v0 - m1) / (2 alpha nu)]^4
// Valid only while (nu/(m0 r0))^2 <= guard and (v0 r0 / nu)^2 <= guard;
// otherwise throws WeakCouplingViolated.
double energy_relativistic_expansion(const ValidatedProblem& problem,
                                     const SchemeSelector& scheme,
                                     double guard = 0.01);

// Scans 0-or-1-based n up to n_max and l up to l_max, collecting every
// (n, l) cell, including no-real-state cells (reported as data).  Cells
// whose kappa radicand is negative are skipped entirely.
struct EnumeratedState {
  int n = 0;
  int l = 0;
  SpectrumResult result;
};
std::vector<EnumeratedState> enumerate_bound_states(
    const PotentialSpec& potential, const MassSpec& mass, int d,
    const SchemeSelector& scheme, int n_start, int n_max = 64, int l_max = 64);

} // namespace hulthen
