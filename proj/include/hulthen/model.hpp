#pragma once

// Problem definition for the D-dimensional Klein-Gordon equation with a
// position-dependent mass and Hulthen-type scalar/vector couplings.
//
// Conventions (natural units, hbar = c = 1):
//   vector potential   V(r) = -v0 * exp(-alpha r) / (1 - exp(-alpha r))
//   scalar potential   S(r) = -s0 * exp(-alpha r) / (1 - exp(-alpha r))
//   mass function      m(r) = m0 + m1 * exp(-alpha r) / (1 - exp(-alpha r))
//
// The mass perturbation folds into an effective scalar strength
// s_tilde = s0 - m1, so every downstream formula sees (v0, s_tilde, alpha,
// m0) plus the quantum numbers.  The radial factorisation
// R(r) = r^{-(D-1)/2} g(r) produces the angular barrier coefficient
// gamma_ang = (D+2l-1)(D+2l-3)/4, which reduces to l(l+1) at D = 3.

#include <stdexcept>
#include <string>

namespace hulthen {

// ---- error taxonomy ------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed or out-of-range input (non-finite value, alpha <= 0, ...)
struct InvalidInput : Error {
  using Error::Error;
};

// argument outside an operation's mathematical domain (r <= 0, x outside
// [-1,1], negative radicand in a closed-form limit, ...)
struct DomainError : Error {
  using Error::Error;
};

// iterative solver failed to reach its tolerance
struct NoConvergence : Error {
  using Error::Error;
};

// a closed-form validity constraint is violated (complex kappa)
struct ConstraintViolation : Error {
  using Error::Error;
};

// weak-coupling guard of the expansion formula failed
struct WeakCouplingViolated : Error {
  using Error::Error;
};

// requested wavefunction branch is not a normalisable bound state
struct NotBound : Error {
  using Error::Error;
};

// shooting solution exceeded the overflow guard even after rescaling
struct IntegrationBlowup : Error {
  using Error::Error;
};

// eigenvalue search exhausted its bracket
struct NotFoundInBracket : Error {
  using Error::Error;
};

// ---- input value types ---------------------------------------------------

struct PotentialSpec {
  double v0 = 0.0;    // vector coupling strength
  double s0 = 0.0;    // scalar coupling strength
  double alpha = 1.0; // screening parameter, > 0
};

struct MassSpec {
  double m0 = 1.0; // rest mass, > 0
  double m1 = 0.0; // mass-perturbation strength
};

struct QuantumState {
  int n = 0; // radial quantum number, >= 0
  int l = 0; // orbital quantum number, >= 0
  int d = 3; // spatial dimension, >= 1
};

// centrifugal approximation scheme
enum class ShiftKind { unshifted, matched, custom };

struct SchemeSelector {
  ShiftKind kind = ShiftKind::matched;
  double custom_c0 = 0.0; // only meaningful when kind == custom

  static SchemeSelector unshifted() { return {ShiftKind::unshifted, 0.0}; }
  static SchemeSelector matched() { return {ShiftKind::matched, 0.0}; }
  static SchemeSelector custom_shift(double c0);
};

// ---- validated problem ---------------------------------------------------

struct ValidatedProblem {
  PotentialSpec potential;
  MassSpec mass;
  QuantumState state;
  double s_tilde = 0.0;   // s0 - m1
  double gamma_ang = 0.0; // (D+2l-1)(D+2l-3)/4
  double r0 = 0.0;        // 1/alpha, characteristic range
};

// Checks finiteness and ranges, then precomputes the derived scalars.
// Throws InvalidInput.  Idempotent: revalidating the embedded fields yields
// the same ValidatedProblem.
ValidatedProblem validate(const PotentialSpec& potential, const MassSpec& mass,
                          const QuantumState& state);

} // namespace hulthen
