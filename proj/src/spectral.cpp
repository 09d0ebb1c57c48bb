#include "abring/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abring/error.hpp"
#include "abring/numerics.hpp"

namespace abring {

std::vector<double> MomentumGrid::abscissae() const {
  if (!(k_max > 0.0)) throw DomainError("MomentumGrid: k_max must be > 0");
  if (points < 2) throw DomainError("MomentumGrid: need at least two points");
  std::vector<double> k(points);
  const double step = 2.0 * k_max / static_cast<double>(points - 1);
  // Lower half by stepping, upper half mirrored so k[j] == -k[points-1-j] exactly.
  for (std::size_t j = 0; j < points / 2; ++j) {
    k[j] = -k_max + static_cast<double>(j) * step;
    k[points - 1 - j] = -k[j];
  }
  if (points % 2 == 1) k[points / 2] = 0.0;
  return k;
}

MomentumGrid default_momentum_grid(double delta, double lambda, std::size_t points) {
  return {40.0 * delta * std::max(1.0, lambda), points};
}

MomentumTransform fourier_transform(const SampledFunction& position, const MomentumGrid& grid) {
  if (position.domain() != Domain::Position) throw DomainError("fourier_transform: input must be position-domain");
  const double h = position.spacing();
  const auto& r = position.abscissae();
  const auto& psi = position.amplitudes();
  const std::size_t n = position.size();
  const auto w = numerics::simpson_weights(n, h);

  std::vector<double> gre(n), gim(n);
  for (std::size_t j = 0; j < n; ++j) {
    gre[j] = w[j] * psi[j].real();
    gim[j] = w[j] * psi[j].imag();
  }

  const auto k = grid.abscissae();
  const double prefactor = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  constexpr std::size_t kResync = 64;
  std::vector<std::complex<double>> out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    // e^{-i k r_j} by rotation, re-anchored every kResync samples.
    const double step_c = std::cos(k[i] * h);
    const double step_s = -std::sin(k[i] * h);
    double sum_re = 0.0;
    double sum_im = 0.0;
    double pc = 0.0;
    double ps = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j % kResync == 0) {
        pc = std::cos(k[i] * r[j]);
        ps = -std::sin(k[i] * r[j]);
      }
      sum_re += gre[j] * pc - gim[j] * ps;
      sum_im += gre[j] * ps + gim[j] * pc;
      const double next_c = pc * step_c - ps * step_s;
      ps = pc * step_s + ps * step_c;
      pc = next_c;
    }
    out[i] = {prefactor * sum_re, prefactor * sum_im};
  }

  MomentumTransform result{SampledFunction(k, std::move(out), Domain::Momentum), 0.0, false};
  const double position_mass = norm_squared(position);
  result.captured_fraction = norm_squared(result.momentum) / position_mass;
  result.truncation_warning = 1.0 - result.captured_fraction >= 0.01;
  return result;
}

double parseval_residual(const SampledFunction& position, const SampledFunction& momentum) {
  return std::abs(norm_squared(position) - norm_squared(momentum));
}

}  // namespace abring
