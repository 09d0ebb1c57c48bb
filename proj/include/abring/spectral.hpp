#pragma once

#include <cstddef>
#include <vector>

#include "abring/wavefunction.hpp"

namespace abring {

/// Symmetric, uniform momentum grid on [-k_max, k_max].
struct MomentumGrid {
  double k_max = 1.0;
  std::size_t points = 4096;

  std::vector<double> abscissae() const;
};

/// k_max = 40 delta max(1, lambda).
MomentumGrid default_momentum_grid(double delta, double lambda, std::size_t points = 4096);

struct MomentumTransform {
  SampledFunction momentum;
  double captured_fraction = 0.0;  // integral of |psi(k)|^2 over the grid / integral of |psi(r)|^2
  bool truncation_warning = false; // set when >= 1% of the mass falls outside [-k_max, k_max]
};

/// psi(k) = (2 pi)^{-1/2} int psi(r) e^{-i k r} dr over the sampled support (zero outside),
/// by Simpson quadrature on the position grid for each k.
MomentumTransform fourier_transform(const SampledFunction& position, const MomentumGrid& grid);

/// |int |psi(r)|^2 dr - int |psi(k)|^2 dk|
double parseval_residual(const SampledFunction& position, const SampledFunction& momentum);

}  // namespace abring
