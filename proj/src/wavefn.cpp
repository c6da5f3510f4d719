#include "hulthen/wavefn.hpp"

#include "hulthen/quadrature.hpp"
#include "hulthen/shift.hpp"

#include <cmath>
#include <string>

namespace hulthen {

namespace {

void check_jacobi_params(const JacobiParams& p) {
  if (p.degree < 0)
    throw InvalidInput("Jacobi degree must be >= 0");
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || p.a <= -1.0 || p.b <= -1.0)
    throw InvalidInput("Jacobi indices must be finite and > -1");
}

void check_jacobi_arg(double x) {
  if (!std::isfinite(x) || x < -1.0 || x > 1.0)
    throw DomainError("Jacobi argument must lie in [-1, 1], got " +
                      std::to_string(x));
}

// real-upper binomial coefficient C(t, k) = prod_{j=1..k} (t - k + j)/j
long double binom_real(long double t, int k) {
  long double acc = 1.0L;
  for (int j = 1; j <= k; ++j) acc *= (t - k + j) / j;
  return acc;
}

} // namespace

double jacobi_eval(const JacobiParams& params, double x) {
  check_jacobi_params(params);
  check_jacobi_arg(x);
  const int n = params.degree;
  const double a = params.a, b = params.b;
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int k = 2; k <= n; ++k) {
    const double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
    const double c2 = (2.0 * k + a + b - 1.0) *
                      ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x +
                       a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
    const double next = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

double jacobi_series_eval(const JacobiParams& params, double x) {
  check_jacobi_params(params);
  check_jacobi_arg(x);
  const int n = params.degree;
  const long double a = params.a, b = params.b;
  const long double xm = 0.5L * (static_cast<long double>(x) - 1.0L);
  const long double xp = 0.5L * (static_cast<long double>(x) + 1.0L);
  long double sum = 0.0L;
  for (int s = 0; s <= n; ++s) {
    long double term = binom_real(n + a, n - s) * binom_real(n + b, s);
    for (int j = 0; j < s; ++j) term *= xm;
    for (int j = 0; j < n - s; ++j) term *= xp;
    sum += term;
  }
  return static_cast<double>(sum);
}

HypergeometricCheck hypergeometric_form_check(const JacobiParams& params,
                                              double z) {
  check_jacobi_params(params);
  if (!std::isfinite(z) || z < 0.0 || z > 1.0)
    throw DomainError("hypergeometric argument must lie in [0, 1]");
  const int n = params.degree;
  const long double a = params.a, b = params.b;

  // terminating 2F1(-n, n+a+b+1; a+1; z)
  long double term = 1.0L, sum = 1.0L;
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<long double>(-n) + k) * (n + a + b + 1.0L + k) /
            ((a + 1.0L + k) * (k + 1.0L)) * static_cast<long double>(z);
    sum += term;
  }

  HypergeometricCheck out;
  out.jacobi_value = jacobi_eval(params, 1.0 - 2.0 * z);
  out.hypergeometric_value = static_cast<double>(sum);
  out.ratio = out.jacobi_value / out.hypergeometric_value;
  return out;
}

double RadialWavefunction::operator()(double r) const {
  if (!(r > 0.0))
    throw DomainError("wavefunction radius must be > 0");
  const double alpha = problem.potential.alpha;
  const double x = alpha * r;
  const double z = std::exp(-x);
  const double half_dm1 = 0.5 * (problem.state.d - 1.0);
  const double poly = jacobi_eval(jacobi, 1.0 - 2.0 * z);

  if (epsilon * x <= 30.0) {
    return norm * std::pow(r, -half_dm1) * std::exp(-epsilon * x) *
           std::pow(1.0 - z, delta) * poly;
  }
  // far tail: assemble the magnitude in log space so exp underflow cannot
  // wipe out the relative accuracy of the decay
  const double log_mag = std::log(norm) - half_dm1 * std::log(r) -
                         epsilon * x + delta * std::log1p(-z) +
                         std::log(std::abs(poly) + 1e-300);
  const double sign = poly >= 0.0 ? 1.0 : -1.0;
  return sign * std::exp(log_mag);
}

RadialWavefunction radial_wavefunction(const ValidatedProblem& problem,
                                       const SchemeSelector& scheme,
                                       Branch branch) {
  const SpectrumResult spec = energy_general(problem, scheme);
  if (!spec.both_real())
    throw NotBound("no real energy pair exists for this (n, l)");
  const double energy =
      branch == Branch::plus ? *spec.e_plus : *spec.e_minus;
  const double eps = spec.intermediates.epsilon(energy);
  if (!(eps > 0.0))
    throw NotBound("epsilon <= 0: threshold state is not normalisable");

  RadialWavefunction wf;
  wf.problem = problem;
  wf.scheme = scheme;
  wf.branch = branch;
  wf.energy = energy;
  wf.epsilon = eps;
  wf.delta = spec.intermediates.delta;
  wf.jacobi = {problem.state.n, 2.0 * eps, spec.intermediates.beta_jacobi};
  wf.norm = 1.0;

  const double alpha = problem.potential.alpha;
  // reduced profile h(r) = z^eps (1-z)^delta P(1-2z); the norm integral of
  // R^2 r^{D-1} collapses to the integral of h^2
  auto h = [&](double r) {
    const double x = alpha * r;
    const double z = std::exp(-x);
    return std::exp(-eps * x) * std::pow(1.0 - z, wf.delta) *
           jacobi_eval(wf.jacobi, 1.0 - 2.0 * z);
  };
  const double r_cut = 40.0 / (eps * alpha);
  const QuadratureResult q = integrate(
      [&](double r) { const double v = h(r); return v * v; }, 0.0, r_cut,
      1e-10, 0.0, 8000);
  if (!(q.value > 0.0) || !std::isfinite(q.value))
    throw NotBound("normalisation integral failed");
  wf.norm = 1.0 / std::sqrt(q.value);
  return wf;
}

std::vector<std::pair<double, double>> sample_wavefunction(
    const RadialWavefunction& wf, const std::vector<double>& radii) {
  std::vector<std::pair<double, double>> out;
  out.reserve(radii.size());
  for (double r : radii) out.emplace_back(r, wf(r));
  return out;
}

} // namespace hulthen
