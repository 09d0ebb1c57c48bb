#pragma once

#include <string>

namespace abring {

/// Physical parameters of a charged particle in a Yukawa well with Aharonov-Bohm
/// flux, a uniform-field term and a conical (disclination) defect.
/// Natural units hbar = mass = charge = light_speed = 1 by default.
struct ModelParams {
  double mass = 1.0;
  double hbar = 1.0;
  double charge = 1.0;
  double light_speed = 1.0;
  double delta = 0.1;     // screening, 1/length
  double v1 = 1.0;        // Yukawa strength, energy * length
  double b_field = 0.0;
  double xi = 0.0;        // AB flux in units of the flux quantum
  double alpha = 1.0;     // angular deficit parameter

  /// omega_c = e B / (mu c)
  double cyclotron() const { return charge * b_field / (mass * light_speed); }
  /// Phi_0 = h c / e = 2 pi hbar c / e
  double flux_quantum() const;
  double phi_ab() const { return xi * flux_quantum(); }
  void set_phi_ab(double phi) { xi = phi / flux_quantum(); }

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

struct QuantumNumbers {
  int n = 0;
  int m = 0;
};

/// Couplings that do not depend on the energy.
struct Couplings {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double eta = 0.0;
};

struct DimensionlessSet {
  double epsilon = 0.0;
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double eta = 0.0;
  double lambda = 0.0;  // exponent of s at s -> 0
  double nu = 0.0;      // exponent of (1 - s) at s -> 1
};

struct BoundStateReport {
  bool exists = false;
  double energy = 0.0;
  double epsilon = 0.0;
  DimensionlessSet set;
  std::string rejection;
};

Couplings couplings(const ModelParams& params, const QuantumNumbers& qn);

/// Full dimensionless set at a trial epsilon. Throws DomainError when lambda or nu
/// would be complex.
DimensionlessSet dimensionless(const ModelParams& params, const QuantumNumbers& qn, double epsilon);

/// V_eff(r) with the angular combinations exactly as they appear in the radial equation
/// (m/alpha^2 + xi in the centrifugal term).
double effective_potential(const ModelParams& params, const QuantumNumbers& qn, double r);

struct VectorPotential {
  double field_part = 0.0;  // A_1, phi component
  double flux_part = 0.0;   // A_2, phi component
};
VectorPotential vector_potential_phi(const ModelParams& params, double r);

/// [delta^2 / (1 - e^{-delta r})^2] / (1 / r^2); 1 means the approximation is exact.
double greene_aldrich_ratio(double delta, double r);

double energy_from_epsilon(const ModelParams& params, double epsilon);
double epsilon_from_energy(const ModelParams& params, double energy);

/// Closed-form spectrum. Never throws for valid parameters; a missing bound state is
/// reported through exists/rejection.
BoundStateReport energy_closed_form(const ModelParams& params, const QuantumNumbers& qn);

/// (lambda + nu) - sqrt(epsilon + beta0 + beta2) + n. Zero at a bound state.
double quantization_residual(const DimensionlessSet& set, int n);

/// Root of quantization_residual in epsilon found by bracketing and bisection,
/// independent of the closed form. Throws NoBoundStateError when no root exists.
double epsilon_by_bisection(const ModelParams& params, const QuantumNumbers& qn,
                            double tolerance = 1e-12);

}  // namespace abring
