#include "hulthen/spectrum.hpp"

#include "hulthen/shift.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace hulthen {

namespace {

double sq(double x) { return x * x; }

// Clamps floating-point dust below zero so exactly-degenerate pairs
// (xi == B^2/4 in exact arithmetic) stay real instead of flipping to
// no_real_state by a few ulps.
double clamp_realness(double disc, double scale) {
  if (disc < 0.0 && disc >= -1e-12 * std::max(scale, 1e-30)) return 0.0;
  return disc;
}

struct Core {
  SpectrumIntermediates im;
  double den = 0.0;  // 4 v0^2 + kappa^2
  double disc = 0.0; // xi - B^2/4, clamped
  double c0 = 0.0;
};

Core assemble(const ValidatedProblem& p, const SchemeSelector& scheme) {
  const double a = p.potential.alpha;
  const double v0 = p.potential.v0;
  const double s0 = p.potential.s0;
  const double m0 = p.mass.m0;
  const double m1 = p.mass.m1;
  const double st = p.s_tilde;
  const double dl2 = p.state.d + 2.0 * p.state.l - 2.0;
  const double lam4 = 4.0 * p.gamma_ang; // (D+2l-1)(D+2l-3)

  Core c;
  c.c0 = resolve_c0(scheme);

  const double kd = 4.0 * (st * st - v0 * v0) + sq(a * dl2);
  if (kd < 0.0)
    throw ConstraintViolation(
        "kappa discriminant negative: 4(s_tilde^2 - v0^2) + alpha^2 (D+2l-2)^2 = " +
        std::to_string(kd));
  const double root_kd = std::sqrt(kd);

  auto& im = c.im;
  im.q = a;
  im.s_tilde = st;
  im.gamma_ang = p.gamma_ang;
  im.kappa = a * (2.0 * p.state.n + 1.0) + root_kd;
  assert(im.kappa > 0.0);
  c.den = 4.0 * v0 * v0 + sq(im.kappa);
  im.xi = (4.0 * m0 * m0 + a * a * lam4 * c.c0) / c.den;
  im.b_coeff = 1.0 - 4.0 * st * (st + 2.0 * m0) / c.den;
  im.beta_jacobi = root_kd / a; // equals 2*delta - 1
  im.delta = 0.5 * (1.0 + im.beta_jacobi);
  im.delta_e = a * a * lam4 * c.c0 / 4.0;
  im.beta2 = (s0 * s0 - v0 * v0) / (a * a);
  im.beta3 = m1 * (m1 - 2.0 * s0) / (a * a);
  im.beta4 = 2.0 * m0 * m1 / (a * a);
  im.v0 = v0;
  im.m0 = m0;

  c.disc = clamp_realness(im.xi - 0.25 * sq(im.b_coeff),
                          std::abs(im.xi) + 0.25 * sq(im.b_coeff));
  return c;
}

// Builds a result around precomputed intermediates; the energies come from
// whatever dedicated arithmetic the caller supplies as center/spread/disc.
SpectrumResult result_from(const SpectrumIntermediates& im, double center,
                           double spread_factor, double disc) {
  SpectrumResult r;
  r.intermediates = im;
  if (disc < 0.0) {
    r.status = SpectrumStatus::no_real_state;
    r.violated = ConstraintId::realness;
    return r;
  }
  const double spread = spread_factor * std::sqrt(disc);
  r.status = SpectrumStatus::both_real;
  r.e_plus = center + spread;
  r.e_minus = center - spread;
  return r;
}

void require_equal_couplings(const ValidatedProblem& p, const char* who) {
  const double scale =
      std::max({std::abs(p.potential.s0), std::abs(p.potential.v0), 1.0});
  if (std::abs(p.potential.s0 - p.potential.v0) > 1e-12 * scale)
    throw InvalidInput(std::string(who) + " requires equal couplings s0 == v0");
}

void require_vanishing_scalar(const ValidatedProblem& p, const char* who) {
  const double scale =
      std::max({std::abs(p.potential.s0), std::abs(p.mass.m1), 1.0});
  if (std::abs(p.s_tilde) > 1e-12 * scale)
    throw InvalidInput(std::string(who) +
                       " requires s0 == m1 (vanishing effective scalar coupling)");
}

void require_dimension(const ValidatedProblem& p, int d, const char* who) {
  if (p.state.d != d)
    throw InvalidInput(std::string(who) + " requires D == " + std::to_string(d));
}

} // namespace

double SpectrumIntermediates::beta1(double energy) const {
  // s0 recovered from beta2/beta3-free storage: s_tilde + m1, with
  // m1 = beta4 alpha^2 / (2 m0)
  const double a2 = q * q;
  const double m1 = beta4 * a2 / (2.0 * m0);
  const double s0 = s_tilde + m1;
  return 2.0 * (energy * v0 + m0 * s0) / a2;
}

double SpectrumIntermediates::epsilon(double energy) const {
  return std::sqrt(std::max(m0 * m0 + delta_e - energy * energy, 0.0)) / q;
}

SpectrumResult energy_general(const ValidatedProblem& p,
                              const SchemeSelector& scheme) {
  const Core core = assemble(p, scheme);
  const double center = 0.5 * p.potential.v0 * core.im.b_coeff;
  return result_from(core.im, center, 0.5 * core.im.kappa, core.disc);
}

ResidualReport energy_equation_residual(const ValidatedProblem& p,
                                        const SchemeSelector& scheme,
                                        double energy) {
  const Core core = assemble(p, scheme);
  const double a = p.potential.alpha;
  const double nu = p.state.n + core.im.delta;
  const double numer = 2.0 * (p.mass.m0 * p.s_tilde + energy * p.potential.v0) +
                       sq(p.s_tilde) - sq(p.potential.v0);
  ResidualReport rep;
  rep.rhs = numer / (2.0 * a * a * nu) - 0.5 * nu;
  rep.residual =
      sq(rep.rhs) - (sq(p.mass.m0) + core.im.delta_e - sq(energy)) / (a * a);
  rep.branch_sign = (rep.rhs > 0.0) ? 1 : (rep.rhs < 0.0 ? -1 : 0);
  return rep;
}

SpectrumResult energy_1d_swave(const PotentialSpec& potential,
                               const MassSpec& mass, int n) {
  const ValidatedProblem p = validate(potential, mass, {n, 0, 1});
  const Core core = assemble(p, SchemeSelector::unshifted());
  const double a = potential.alpha;
  const double st = p.s_tilde;
  const double rad = a * a + 4.0 * (st * st - sq(potential.v0));
  if (rad < 0.0)
    throw ConstraintViolation("1D kappa discriminant negative");
  const double kap = a * (2.0 * n + 1.0) + std::sqrt(rad);
  const double den = 4.0 * sq(potential.v0) + kap * kap;
  const double b = 1.0 - 4.0 * st * (st + 2.0 * mass.m0) / den;
  const double disc =
      clamp_realness(sq(mass.m0) / den - sq(b) / 16.0,
                     sq(mass.m0) / den + sq(b) / 16.0);
  return result_from(core.im, 0.5 * potential.v0 * b, kap, disc);
}

SpectrumResult energy_1d_pure_vector(const PotentialSpec& potential,
                                     const MassSpec& mass, int n) {
  const ValidatedProblem p = validate(potential, mass, {n, 0, 1});
  require_vanishing_scalar(p, "energy_1d_pure_vector");
  const Core core = assemble(p, SchemeSelector::unshifted());
  const double a = potential.alpha;
  const double rad = a * a - 4.0 * sq(potential.v0);
  if (rad < 0.0)
    throw ConstraintViolation("1D pure-vector kappa discriminant negative");
  const double kap = a * (2.0 * n + 1.0) + std::sqrt(rad);
  const double den = 4.0 * sq(potential.v0) + kap * kap;
  const double disc = clamp_realness(sq(mass.m0) / den - 1.0 / 16.0,
                                     sq(mass.m0) / den + 1.0 / 16.0);
  return result_from(core.im, 0.5 * potential.v0, kap, disc);
}

SpectrumResult energy_1d_ground_half_screening(const PotentialSpec& potential,
                                               const MassSpec& mass) {
  const ValidatedProblem p = validate(potential, mass, {0, 0, 1});
  require_vanishing_scalar(p, "energy_1d_ground_half_screening");
  if (std::abs(potential.v0 - 0.5 * potential.alpha) >
      1e-12 * std::max(1.0, potential.alpha))
    throw InvalidInput(
        "energy_1d_ground_half_screening requires v0 == alpha/2");
  const Core core = assemble(p, SchemeSelector::unshifted());
  const double ratio = 2.0 * sq(mass.m0) / sq(potential.v0) - 1.0;
  const double disc = clamp_realness(ratio, std::abs(ratio) + 1.0);
  return result_from(core.im, 0.5 * potential.v0, 0.5 * potential.v0, disc);
}

SpectrumResult energy_pure_scalar(const MassSpec& mass, double alpha, int n) {
  const PotentialSpec potential{0.0, mass.m1, alpha};
  const ValidatedProblem p = validate(potential, mass, {n, 0, 1});
  const Core core = assemble(p, SchemeSelector::unshifted());
  const double disc = clamp_realness(
      sq(mass.m0) - sq(alpha) * sq(n + 1.0) / 4.0,
      sq(mass.m0) + sq(alpha) * sq(n + 1.0) / 4.0);
  return result_from(core.im, 0.0, 1.0, disc);
}

SpectrumResult energy_3d_lwave(const ValidatedProblem& p,
                               const SchemeSelector& scheme) {
  require_dimension(p, 3, "energy_3d_lwave");
  const Core core = assemble(p, scheme);
  const double a = p.potential.alpha;
  const double st = p.s_tilde;
  const double l = p.state.l;
  const double rad = sq(a * (2.0 * l + 1.0)) + 4.0 * (st * st - sq(p.potential.v0));
  if (rad < 0.0)
    throw ConstraintViolation("3D kappa discriminant negative");
  const double kap = a * (2.0 * p.state.n + 1.0) + std::sqrt(rad);
  const double den = 4.0 * sq(p.potential.v0) + kap * kap;
  const double b = 1.0 - 4.0 * st * (st + 2.0 * p.mass.m0) / den;
  const double xi3 = (sq(p.mass.m0) + a * a * l * (l + 1.0) * core.c0) / den;
  const double disc = clamp_realness(xi3 - sq(b) / 16.0, xi3 + sq(b) / 16.0);
  return result_from(core.im, 0.5 * p.potential.v0 * b, kap, disc);
}

SpectrumResult energy_3d_pure_vector(const ValidatedProblem& p,
                                     const SchemeSelector& scheme) {
  require_dimension(p, 3, "energy_3d_pure_vector");
  require_vanishing_scalar(p, "energy_3d_pure_vector");
  const Core core = assemble(p, scheme);
  const double a = p.potential.alpha;
  const double l = p.state.l;
  const double rad = sq(a * (2.0 * l + 1.0)) - 4.0 * sq(p.potential.v0);
  if (rad < 0.0)
    throw ConstraintViolation("3D pure-vector kappa discriminant negative");
  const double kap = a * (2.0 * p.state.n + 1.0) + std::sqrt(rad);
  const double den = 4.0 * sq(p.potential.v0) + kap * kap;
  const double xi3 = (sq(p.mass.m0) + a * a * l * (l + 1.0) * core.c0) / den;
  const double disc = clamp_realness(xi3 - 1.0 / 16.0, xi3 + 1.0 / 16.0);
  return result_from(core.im, 0.5 * p.potential.v0, kap, disc);
}

SpectrumResult energy_3d_swave(const ValidatedProblem& p,
                               const SchemeSelector& scheme) {
  require_dimension(p, 3, "energy_3d_swave");
  if (p.state.l != 0)
    throw InvalidInput("energy_3d_swave requires l == 0");
  const Core core = assemble(p, scheme);
  const double a = p.potential.alpha;
  const double st = p.s_tilde;
  const double rad = a * a + 4.0 * (st * st - sq(p.potential.v0));
  if (rad < 0.0)
    throw ConstraintViolation("3D s-wave kappa discriminant negative");
  const double kap = a * (2.0 * p.state.n + 1.0) + std::sqrt(rad);
  const double den = 4.0 * sq(p.potential.v0) + kap * kap;
  const double b = 1.0 - 4.0 * st * (st + 2.0 * p.mass.m0) / den;
  const double disc = clamp_realness(sq(p.mass.m0) / den - sq(b) / 16.0,
                                     sq(p.mass.m0) / den + sq(b) / 16.0);
  return result_from(core.im, 0.5 * p.potential.v0 * b, kap, disc);
}

SpectrumResult energy_3d(const ValidatedProblem& p, const SchemeSelector& scheme) {
  require_dimension(p, 3, "energy_3d");
  if (p.state.l == 0) return energy_3d_swave(p, scheme);
  if (p.s_tilde == 0.0) return energy_3d_pure_vector(p, scheme);
  return energy_3d_lwave(p, scheme);
}

double energy_equal_scalar_vector_residual(const ValidatedProblem& p,
                                           const SchemeSelector& scheme,
                                           double energy) {
  require_equal_couplings(p, "energy_equal_scalar_vector_residual");
  const double c0 = resolve_c0(scheme);
  const double r0 = p.r0;
  const double v0 = p.potential.v0;
  const double m0 = p.mass.m0;
  const double m1 = p.mass.m1;
  const double dl2 = p.state.d + 2.0 * p.state.l - 2.0;
  const double lam4 = 4.0 * p.gamma_ang;

  const double rad = dl2 * dl2 + 4.0 * sq(r0 * m1) - 8.0 * sq(r0) * v0 * m1;
  if (rad < 0.0)
    throw ConstraintViolation("equal-coupling delta radicand negative");
  const double nu = p.state.n + 0.5 * (1.0 + std::sqrt(rad));

  const double lhs_sq = m0 * m0 + lam4 * c0 / (4.0 * sq(r0)) - energy * energy;
  const double rhs = (2.0 * r0 * v0 * (m0 + energy - m1) +
                      r0 * (m1 - 2.0 * m0) * m1) /
                         (2.0 * nu) -
                     nu / (2.0 * r0);
  return rhs * rhs - lhs_sq;
}

double energy_nonrelativistic(const ValidatedProblem& p,
                              const SchemeSelector& scheme) {
  require_equal_couplings(p, "energy_nonrelativistic");
  const double c0 = resolve_c0(scheme);
  const double a = p.potential.alpha;
  const double v0 = p.potential.v0;
  const double m0 = p.mass.m0;
  const double m1 = p.mass.m1;
  const double dl2 = p.state.d + 2.0 * p.state.l - 2.0;
  const double lam4 = 4.0 * p.gamma_ang;

  const double rad = sq(a * dl2) + 4.0 * m1 * m1 - 8.0 * v0 * m1;
  if (rad < 0.0)
    throw DomainError("nonrelativistic delta radicand negative");
  const double nu = p.state.n + 0.5 * (1.0 + std::sqrt(rad) / a);

  const double bracket = ((2.0 * v0 - m1) * (2.0 * m0 - m1) - a * a * nu * nu) / nu;
  return a * a * lam4 * c0 / (8.0 * m0) - sq(bracket) / (8.0 * m0 * a * a);
}

double energy_relativistic_expansion(const ValidatedProblem& p,
                                     const SchemeSelector& scheme,
                                     double guard) {
  if (!std::isfinite(guard) || guard <= 0.0)
    throw InvalidInput("expansion guard must be > 0");
  const double e_nr = energy_nonrelativistic(p, scheme); // validates couplings
  const double a = p.potential.alpha;
  const double v0 = p.potential.v0;
  const double m0 = p.mass.m0;
  const double m1 = p.mass.m1;
  const double dl2 = p.state.d + 2.0 * p.state.l - 2.0;
  const double rad = sq(a * dl2) + 4.0 * m1 * m1 - 8.0 * v0 * m1;
  const double nu = p.state.n + 0.5 * (1.0 + std::sqrt(rad) / a);

  const double g1 = sq(nu * a / m0);  // (nu / (m0 r0))^2
  const double g2 = sq(v0 / (a * nu)); // (v0 r0 / nu)^2
  if (g1 > guard || g2 > guard)
    throw WeakCouplingViolated(
        "weak-coupling guards exceeded: (nu/(m0 r0))^2 = " + std::to_string(g1) +
        ", (v0 r0/nu)^2 = " + std::to_string(g2) +
        ", guard = " + std::to_string(guard));

  const double quart = sq(sq((2.0 * v0 - m1) / (2.0 * a * nu)));
  return m0 + e_nr + 2.0 * (2.0 * m0 - m1) * quart;
}

std::vector<EnumeratedState> enumerate_bound_states(
    const PotentialSpec& potential, const MassSpec& mass, int d,
    const SchemeSelector& scheme, int n_start, int n_max, int l_max) {
  if (n_start != 0 && n_start != 1)
    throw InvalidInput("n_start must be 0 or 1");
  if (n_max < n_start || l_max < 0)
    throw InvalidInput("enumeration bounds must satisfy n_max >= n_start, l_max >= 0");

  std::vector<EnumeratedState> out;
  for (int n = n_start; n <= n_max; ++n) {
    for (int l = 0; l <= l_max; ++l) {
      const ValidatedProblem p = validate(potential, mass, {n, l, d});
      EnumeratedState st;
      st.n = n;
      st.l = l;
      try {
        st.result = energy_general(p, scheme);
      } catch (const ConstraintViolation&) {
        continue; // kappa complex: the closed form does not apply here
      }
      out.push_back(std::move(st));
    }
  }
  return out;
}

} // namespace hulthen
