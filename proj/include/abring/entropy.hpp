#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>

#include "abring/model.hpp"
#include "abring/wavefunction.hpp"

namespace abring {

/// Bialynicki-Birula--Mycielski lower bound for one effective dimension, 1 + ln(pi) nats.
inline const double kBbmBound = 1.0 + std::log(std::numbers::pi);
/// Slack allowed below the bound before a state is flagged.
inline constexpr double kBbmSlack = 1e-3;

struct EntropyReport {
  double s_r = 0.0;
  double s_k = 0.0;
  double sum = 0.0;
  double bbm_bound = kBbmBound;
  double margin = 0.0;
  bool pass = false;
  double norm_residual_r = 0.0;
  double norm_residual_k = 0.0;
};

/// -int rho ln rho, with rho < 1e-30 contributing zero. Throws DomainError unless
/// rho >= 0 and integrates to 1 within 1e-6.
double shannon_entropy(const SampledDensity& rho);
double shannon_position(const SampledDensity& rho);
double shannon_momentum(const SampledDensity& rho);

EntropyReport bbm_check(double s_r, double s_k);

struct PipelineOptions {
  RadialGrid radial;
  std::size_t k_points = 4096;
  std::optional<double> k_max;
  /// Recompute at doubled resolution and flag |dS| > 1e-4.
  bool check_convergence = false;
};

struct PipelineDiagnostics {
  double r_min = 0.0;
  double r_max = 0.0;
  double k_max = 0.0;
  double parseval_residual = 0.0;
  bool truncation_warning = false;
  double convergence_delta = std::numeric_limits<double>::quiet_NaN();
  bool under_resolved = false;
};

struct PipelineResult {
  BoundStateReport state;
  EntropyReport report;
  PipelineDiagnostics diagnostics;
};

/// Eigenfunction -> normalize -> S_r; Fourier transform -> renormalize -> S_k; BBM check.
/// Errors are rethrown with the failing stage prefixed to the message.
PipelineResult entropy_pipeline(const ModelParams& params, const QuantumNumbers& qn,
                                const PipelineOptions& options = {});

}  // namespace abring
