#include "abring/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abring/error.hpp"
#include "abring/numerics.hpp"
#include "abring/spectral.hpp"

namespace abring {

namespace {

constexpr double kDensityFloor = 1e-30;
constexpr double kNormTolerance = 1e-6;
constexpr double kConvergenceTolerance = 1e-4;

template <class F>
auto staged(const char* stage, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(stage) + ": " + e.what());
  }
}

double uniform_spacing(const std::vector<double>& x) {
  const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs((x[i] - x[i - 1]) - h) > 1e-6 * h) throw DomainError("shannon_entropy: grid must be uniform");
  }
  return h;
}

struct Stage {
  double s_r = 0.0;
  double s_k = 0.0;
  double norm_residual_r = 0.0;
  double parseval = 0.0;
  bool truncation_warning = false;
};

Stage run_stages(const Eigenfunction& ef, const RadialGrid& radial, const MomentumGrid& kgrid) {
  const SampledFunction raw = staged("radial_eigenfunction", [&] { return sample(ef, radial); });
  const Normalized normalized = staged("normalize", [&] { return normalize(raw); });

  Stage out;
  // Re-integrate the normalized closed form at doubled resolution.
  out.norm_residual_r = staged("normalize", [&] {
    RadialGrid fine = radial;
    fine.points = 2 * radial.points - 1;
    fine.r_max = raw.abscissae().back();
    const SampledFunction dense = sample(ef, fine);
    return std::abs(1.0 - normalized.norm_constant * normalized.norm_constant * norm_squared(dense));
  });
  out.s_r = staged("shannon_position", [&] { return shannon_position(probability_density(normalized.function)); });

  const MomentumTransform transform =
      staged("fourier_transform", [&] { return fourier_transform(normalized.function, kgrid); });
  out.parseval = parseval_residual(normalized.function, transform.momentum);
  out.truncation_warning = transform.truncation_warning;
  const Normalized momentum = staged("normalize(k)", [&] { return normalize(transform.momentum); });
  out.s_k = staged("shannon_momentum", [&] { return shannon_momentum(probability_density(momentum.function)); });
  return out;
}

}  // namespace

double shannon_entropy(const SampledDensity& rho) {
  if (rho.values.size() != rho.abscissae.size() || rho.values.size() < 2) {
    throw DomainError("shannon_entropy: malformed density");
  }
  const double h = uniform_spacing(rho.abscissae);
  for (double v : rho.values) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("shannon_entropy: density must be finite and >= 0");
  }
  const auto w = numerics::simpson_weights(rho.values.size(), h);
  double mass = 0.0;
  double entropy = 0.0;
  for (std::size_t i = 0; i < rho.values.size(); ++i) {
    const double v = rho.values[i];
    mass += w[i] * v;
    if (v >= kDensityFloor) entropy -= w[i] * v * std::log(v);
  }
  if (std::abs(mass - 1.0) > kNormTolerance) {
    throw DomainError("shannon_entropy: density integrates to " + std::to_string(mass) + ", not 1");
  }
  return entropy;
}

double shannon_position(const SampledDensity& rho) {
  if (rho.domain != Domain::Position) throw DomainError("shannon_position: expected a position-space density");
  return shannon_entropy(rho);
}

double shannon_momentum(const SampledDensity& rho) {
  if (rho.domain != Domain::Momentum) throw DomainError("shannon_momentum: expected a momentum-space density");
  return shannon_entropy(rho);
}

EntropyReport bbm_check(double s_r, double s_k) {
  EntropyReport r;
  r.s_r = s_r;
  r.s_k = s_k;
  r.sum = s_r + s_k;
  r.bbm_bound = kBbmBound;
  r.margin = r.sum - r.bbm_bound;
  r.pass = r.margin >= -kBbmSlack;
  return r;
}

PipelineResult entropy_pipeline(const ModelParams& params, const QuantumNumbers& qn,
                                const PipelineOptions& options) {
  const Eigenfunction ef = staged("radial_eigenfunction", [&] { return Eigenfunction(params, qn); });

  PipelineResult result;
  result.state = ef.state();
  RadialGrid radial = options.radial;
  radial.r_max = radial.r_max.value_or(ef.auto_r_max());
  MomentumGrid kgrid = default_momentum_grid(params.delta, ef.state().set.lambda, options.k_points);
  if (options.k_max) kgrid.k_max = *options.k_max;

  const Stage base = run_stages(ef, radial, kgrid);
  result.report = bbm_check(base.s_r, base.s_k);
  result.report.norm_residual_r = base.norm_residual_r;
  result.report.norm_residual_k = base.parseval;

  auto& diag = result.diagnostics;
  diag.r_min = ef.r_min();
  diag.r_max = *radial.r_max;
  diag.k_max = kgrid.k_max;
  diag.parseval_residual = base.parseval;
  diag.truncation_warning = base.truncation_warning;

  if (options.check_convergence) {
    RadialGrid fine_radial = radial;
    fine_radial.points = 2 * radial.points;
    MomentumGrid fine_k = kgrid;
    fine_k.points = 2 * kgrid.points;
    const Stage fine = run_stages(ef, fine_radial, fine_k);
    diag.convergence_delta = std::max(std::abs(fine.s_r - base.s_r), std::abs(fine.s_k - base.s_k));
    diag.under_resolved = !(diag.convergence_delta <= kConvergenceTolerance);
  }
  return result;
}

}  // namespace abring
