#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "abring/model.hpp"

namespace abring {

enum class Domain { Position, Momentum };

/// Samples of a complex function on a strictly increasing grid.
class SampledFunction {
public:
  SampledFunction(std::vector<double> abscissae, std::vector<std::complex<double>> amplitudes,
                  Domain domain);

  const std::vector<double>& abscissae() const { return x_; }
  const std::vector<std::complex<double>>& amplitudes() const { return y_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return x_.size(); }

  /// Grid spacing; throws DomainError if the grid is not uniform.
  double spacing() const;

private:
  std::vector<double> x_;
  std::vector<std::complex<double>> y_;
  Domain domain_;
};

/// Real, non-negative samples (a probability density).
struct SampledDensity {
  std::vector<double> abscissae;
  std::vector<double> values;
  Domain domain = Domain::Position;
};

struct RadialGrid {
  std::size_t points = 4096;
  std::optional<double> r_max;  // auto when empty
};

/// Closed-form radial eigenfunction of a bound state,
///   psi(r) = (2 pi r)^{-1/2} 2F1(a, b; c; s) s^lambda (1 - s)^nu,  s = e^{-delta r},
/// with b = -n (terminating), a = 2(lambda + nu) + n, c = 2 lambda + 1.
/// Values carry an internal scale so the peak of |psi| is of order one.
class Eigenfunction {
public:
  /// Throws NoBoundStateError with the rejection reason when the state does not exist.
  Eigenfunction(const ModelParams& params, const QuantumNumbers& qn);

  const ModelParams& params() const { return params_; }
  const QuantumNumbers& quantum_numbers() const { return qn_; }
  const BoundStateReport& state() const { return state_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  /// R(r) = sqrt(2 pi r) psi(r)
  double radial(double r) const;
  double psi(double r) const;

  double r_min() const { return 1e-6 / params_.delta; }
  /// Smallest scanned radius beyond which |psi|^2 < 1e-14 of its maximum.
  double auto_r_max() const { return r_max_; }

private:
  double log_envelope(double r) const;  // log of s^lambda (1-s)^nu
  double polynomial(double r) const;

  ModelParams params_;
  QuantumNumbers qn_;
  BoundStateReport state_;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0;
  double log_scale_ = 0.0;
  double r_max_ = 0.0;
};

/// Uniform samples of psi on [r_min, r_max].
SampledFunction sample(const Eigenfunction& ef, const RadialGrid& grid);

/// Throws NoBoundStateError when no bound state exists.
SampledFunction radial_eigenfunction(const ModelParams& params, const QuantumNumbers& qn,
                                     const RadialGrid& grid = {});

/// Integral of |f|^2 by composite Simpson.
double norm_squared(const SampledFunction& f);

struct Normalized {
  SampledFunction function;
  double norm_constant;
};
Normalized normalize(const SampledFunction& f);

SampledDensity probability_density(const SampledFunction& f);

/// Sign changes of the real part, skipping exact zeros.
int count_sign_changes(const SampledFunction& f);

struct OdeResidual {
  double max_relative = 0.0;
  std::size_t points_checked = 0;
};

/// Pointwise residual of the transformed radial equation
///   R'' + R'/s + [-(eps+b0+b2) s^2 + (2 eps + b0 - b1) s - (eps + eta)] R / (s^2 (1-s)^2) = 0
/// with R recovered from psi samples and derivatives taken by five-point finite
/// differences in r. Each residual is relative to the sum of the term magnitudes.
/// Points where the density is below density_floor times its maximum are skipped.
OdeResidual radial_equation_residual(const Eigenfunction& ef, const SampledFunction& psi,
                                     double density_floor = 1e-8);

}  // namespace abring
