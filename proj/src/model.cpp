#include "hulthen/model.hpp"

#include <cmath>

namespace hulthen {

SchemeSelector SchemeSelector::custom_shift(double c0) {
  if (!std::isfinite(c0) || c0 < 0.0)
    throw InvalidInput("custom shift constant must be finite and >= 0, got " +
                       std::to_string(c0));
  return {ShiftKind::custom, c0};
}

ValidatedProblem validate(const PotentialSpec& potential, const MassSpec& mass,
                          const QuantumState& state) {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(potential.v0) || !finite(potential.s0) || !finite(potential.alpha))
    throw InvalidInput("potential parameters must be finite");
  if (!finite(mass.m0) || !finite(mass.m1))
    throw InvalidInput("mass parameters must be finite");
  if (potential.alpha <= 0.0)
    throw InvalidInput("screening parameter alpha must be > 0, got " +
                       std::to_string(potential.alpha));
  if (mass.m0 <= 0.0)
    throw InvalidInput("rest mass m0 must be > 0, got " + std::to_string(mass.m0));
  if (state.n < 0)
    throw InvalidInput("radial quantum number n must be >= 0, got " +
                       std::to_string(state.n));
  if (state.l < 0)
    throw InvalidInput("orbital quantum number l must be >= 0, got " +
                       std::to_string(state.l));
  if (state.d < 1)
    throw InvalidInput("dimension D must be >= 1, got " + std::to_string(state.d));

  ValidatedProblem p;
  p.potential = potential;
  p.mass = mass;
  p.state = state;
  p.s_tilde = potential.s0 - mass.m1;
  const double a = state.d + 2.0 * state.l;
  p.gamma_ang = (a - 1.0) * (a - 3.0) / 4.0;
  p.r0 = 1.0 / potential.alpha;
  return p;
}

} // namespace hulthen
