#include "abring/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "abring/error.hpp"
#include "abring/numerics.hpp"

namespace abring {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string("ModelParams: ") + what);
}

// 1 - e^{-x} without cancellation at small x.
double one_minus_exp_neg(double x) { return -std::expm1(-x); }

}  // namespace

double ModelParams::flux_quantum() const {
  return 2.0 * std::numbers::pi * hbar * light_speed / charge;
}

void ModelParams::validate() const {
  for (double v : {mass, hbar, charge, light_speed, delta, v1, b_field, xi, alpha}) {
    require(std::isfinite(v), "all parameters must be finite");
  }
  require(mass > 0.0, "mass must be > 0");
  require(hbar > 0.0, "hbar must be > 0");
  require(charge > 0.0, "charge must be > 0");
  require(light_speed > 0.0, "light_speed must be > 0");
  require(delta > 0.0, "delta must be > 0");
  require(v1 >= 0.0, "v1 must be >= 0");
  require(b_field >= 0.0, "b_field must be >= 0 (cyclotron frequency >= 0)");
  require(alpha > 0.0, "alpha must be > 0");
}

Couplings couplings(const ModelParams& p, const QuantumNumbers& qn) {
  p.validate();
  const double wc = p.cyclotron();
  const double m = qn.m;
  Couplings c;
  c.beta0 = 2.0 * p.mass * p.v1 / (p.hbar * p.hbar * p.delta);
  c.beta1 = 2.0 * p.mass * wc / (p.hbar * p.delta) * (m / (p.alpha * p.alpha) + p.xi / p.alpha);
  const double cyc = p.mass * wc / (p.hbar * p.delta);
  c.beta2 = cyc * cyc;
  const double angular = m / p.alpha + p.xi;
  c.eta = angular * angular - 0.25;
  return c;
}

DimensionlessSet dimensionless(const ModelParams& params, const QuantumNumbers& qn, double epsilon) {
  const Couplings c = couplings(params, qn);
  if (epsilon + c.eta < 0.0) throw DomainError("dimensionless: epsilon + eta < 0, lambda is complex");
  const double nu_radicand = 0.25 + c.beta1 + c.beta2 + c.eta;
  if (nu_radicand < 0.0) throw DomainError("dimensionless: 1/4 + beta1 + beta2 + eta < 0, nu is complex");
  DimensionlessSet s;
  s.epsilon = epsilon;
  s.beta0 = c.beta0;
  s.beta1 = c.beta1;
  s.beta2 = c.beta2;
  s.eta = c.eta;
  s.lambda = std::sqrt(epsilon + c.eta);
  s.nu = 0.5 + std::sqrt(nu_radicand);
  return s;
}

double effective_potential(const ModelParams& p, const QuantumNumbers& qn, double r) {
  p.validate();
  if (!(r > 0.0)) throw DomainError("effective_potential: r must be > 0");
  const double wc = p.cyclotron();
  const double m = qn.m;
  const double a2 = p.alpha * p.alpha;
  const double s = std::exp(-p.delta * r);
  const double t = one_minus_exp_neg(p.delta * r);

  const double yukawa = -p.v1 * s / r;
  const double paramagnetic = p.hbar * wc * (m / a2 + p.xi / p.alpha) * s / (t * r);
  const double diamagnetic = 0.5 * p.mass * wc * wc * s * s / (t * t);
  const double angular = m / a2 + p.xi;
  const double centrifugal = p.hbar * p.hbar / (2.0 * p.mass) * (angular * angular - 0.25) / (r * r);
  return yukawa + paramagnetic + diamagnetic + centrifugal;
}

VectorPotential vector_potential_phi(const ModelParams& p, double r) {
  p.validate();
  if (!(r > 0.0)) throw DomainError("vector_potential_phi: r must be > 0");
  const double s = std::exp(-p.delta * r);
  const double t = one_minus_exp_neg(p.delta * r);
  return {p.b_field * s / (p.alpha * t), p.phi_ab() / (2.0 * std::numbers::pi * r)};
}

double greene_aldrich_ratio(double delta, double r) {
  if (!(delta > 0.0) || !(r > 0.0)) throw DomainError("greene_aldrich_ratio: need delta > 0 and r > 0");
  const double x = delta * r;
  const double q = x / one_minus_exp_neg(x);
  return q * q;
}

double energy_from_epsilon(const ModelParams& p, double epsilon) {
  return -p.hbar * p.hbar * p.delta * p.delta * epsilon / (2.0 * p.mass);
}

double epsilon_from_energy(const ModelParams& p, double energy) {
  return -2.0 * p.mass * energy / (p.hbar * p.hbar * p.delta * p.delta);
}

BoundStateReport energy_closed_form(const ModelParams& params, const QuantumNumbers& qn) {
  if (qn.n < 0) throw DomainError("energy_closed_form: n must be >= 0");
  const Couplings c = couplings(params, qn);
  BoundStateReport report;
  report.set.beta0 = c.beta0;
  report.set.beta1 = c.beta1;
  report.set.beta2 = c.beta2;
  report.set.eta = c.eta;

  const double nu_radicand = 0.25 + c.beta1 + c.beta2 + c.eta;
  if (nu_radicand < 0.0) {
    report.rejection = "nu is complex (1/4 + beta1 + beta2 + eta < 0)";
    return report;
  }
  const double nu = 0.5 + std::sqrt(nu_radicand);
  const double shifted = qn.n + nu;
  // Squaring the quantization condition gives lambda = (beta0 + beta2 - eta - shifted^2) / (2 shifted);
  // only lambda > 0 solves the unsquared condition with a decaying tail.
  const double lambda = (c.beta0 + c.beta2 - c.eta - shifted * shifted) / (2.0 * shifted);
  report.set.nu = nu;
  report.set.lambda = lambda;
  if (!(lambda > 0.0)) {
    report.rejection = "no decaying solution (lambda <= 0): well too shallow for this state";
    return report;
  }
  const double epsilon = lambda * lambda - c.eta;
  report.set.epsilon = epsilon;
  if (!(epsilon > 0.0)) {
    report.rejection = "epsilon <= 0: state is not bound (E >= 0)";
    return report;
  }
  report.exists = true;
  report.epsilon = epsilon;
  report.energy = energy_from_epsilon(params, epsilon);
  return report;
}

double quantization_residual(const DimensionlessSet& s, int n) {
  const double under = s.epsilon + s.beta0 + s.beta2;
  if (s.epsilon + s.eta < 0.0 || under < 0.0) {
    throw DomainError("quantization_residual: epsilon outside the real-exponent domain");
  }
  return (s.lambda + s.nu) - std::sqrt(under) + n;
}

double epsilon_by_bisection(const ModelParams& params, const QuantumNumbers& qn, double tolerance) {
  const Couplings c = couplings(params, qn);
  if (0.25 + c.beta1 + c.beta2 + c.eta < 0.0) throw NoBoundStateError("nu is complex");
  auto residual = [&](double eps) {
    return quantization_residual(dimensionless(params, qn, eps), qn.n);
  };
  const double lo = std::max(1e-8, -c.eta);
  if (residual(lo) >= 0.0) throw NoBoundStateError("quantization residual has no sign change");
  double hi = std::max(c.beta0 + c.beta2, 2.0 * lo);
  int expansions = 0;
  while (residual(hi) <= 0.0) {
    hi *= 4.0;
    if (++expansions > 200) throw NumericalError("epsilon_by_bisection: bracket expansion failed");
  }
  return numerics::bisect(residual, lo, hi, tolerance);
}

}  // namespace abring
