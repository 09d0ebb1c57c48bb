#include "abring/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "abring/error.hpp"
#include "abring/numerics.hpp"
#include "abring/specfun.hpp"

namespace abring {

SampledFunction::SampledFunction(std::vector<double> abscissae,
                                 std::vector<std::complex<double>> amplitudes, Domain domain)
    : x_(std::move(abscissae)), y_(std::move(amplitudes)), domain_(domain) {
  if (x_.size() != y_.size()) throw DomainError("SampledFunction: abscissae/amplitudes size mismatch");
  if (x_.size() < 2) throw DomainError("SampledFunction: need at least two samples");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i].real()) || !std::isfinite(y_[i].imag())) {
      throw NumericalError("SampledFunction: non-finite sample at index " + std::to_string(i));
    }
    if (i > 0 && !(x_[i] > x_[i - 1])) throw DomainError("SampledFunction: abscissae must be strictly increasing");
  }
}

double SampledFunction::spacing() const {
  const double h = (x_.back() - x_.front()) / static_cast<double>(x_.size() - 1);
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (std::abs((x_[i] - x_[i - 1]) - h) > 1e-6 * h) {
      throw DomainError("SampledFunction: quadrature needs a uniform grid");
    }
  }
  return h;
}

Eigenfunction::Eigenfunction(const ModelParams& params, const QuantumNumbers& qn)
    : params_(params), qn_(qn), state_(energy_closed_form(params, qn)) {
  if (!state_.exists) throw NoBoundStateError("no bound state for (n=" + std::to_string(qn.n) +
                                              ", m=" + std::to_string(qn.m) + "): " + state_.rejection);
  const double lambda = state_.set.lambda;
  const double nu = state_.set.nu;
  // b = lambda + nu - sqrt(eps + beta0 + beta2) equals -n on the quantization condition.
  b_ = -static_cast<double>(qn.n);
  a_ = 2.0 * (lambda + nu) + qn.n;
  c_ = 2.0 * lambda + 1.0;

  // Scan outward for the peak and the 1e-14 density cutoff.
  constexpr int kScan = 20000;
  const double delta = params_.delta;
  const double log_cut = std::log(1e-14);
  double span = std::log1p(nu / lambda) / delta + 40.0 / (lambda * delta);
  for (int attempt = 0; attempt < 40; ++attempt, span *= 2.0) {
    const double lo = r_min();
    const double step = (span - lo) / (kScan - 1);
    std::vector<double> log_density(kScan);
    double peak = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < kScan; ++j) {
      const double r = lo + j * step;
      const double f = std::abs(polynomial(r));
      log_density[j] = 2.0 * (log_envelope(r) + std::log(f)) - std::log(2.0 * std::numbers::pi * r);
      peak = std::max(peak, log_density[j]);
    }
    int last = -1;
    for (int j = kScan - 1; j >= 0; --j) {
      if (log_density[j] >= peak + log_cut) {
        last = j;
        break;
      }
    }
    if (last >= 0 && last < kScan - 1) {
      log_scale_ = 0.5 * peak;
      r_max_ = lo + (last + 1) * step;
      return;
    }
  }
  throw NumericalError("Eigenfunction: could not locate the decay cutoff");
}

double Eigenfunction::log_envelope(double r) const {
  const double x = params_.delta * r;
  return -state_.set.lambda * x + state_.set.nu * std::log(-std::expm1(-x));
}

double Eigenfunction::polynomial(double r) const {
  return specfun::hypergeometric_2f1(a_, b_, c_, std::exp(-params_.delta * r));
}

double Eigenfunction::psi(double r) const {
  if (!(r > 0.0)) return 0.0;
  return polynomial(r) * std::exp(log_envelope(r) - 0.5 * std::log(2.0 * std::numbers::pi * r) - log_scale_);
}

double Eigenfunction::radial(double r) const {
  if (!(r > 0.0)) return 0.0;
  return polynomial(r) * std::exp(log_envelope(r) - log_scale_);
}

SampledFunction sample(const Eigenfunction& ef, const RadialGrid& grid) {
  if (grid.points < 2) throw DomainError("RadialGrid: need at least two points");
  const double lo = ef.r_min();
  const double hi = grid.r_max.value_or(ef.auto_r_max());
  if (!(hi > lo)) throw DomainError("RadialGrid: r_max must exceed r_min");
  const std::size_t n = grid.points;
  const double h = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> r(n);
  std::vector<std::complex<double>> psi(n);
  for (std::size_t j = 0; j < n; ++j) {
    r[j] = j + 1 == n ? hi : lo + static_cast<double>(j) * h;
    psi[j] = ef.psi(r[j]);
  }
  return SampledFunction(std::move(r), std::move(psi), Domain::Position);
}

SampledFunction radial_eigenfunction(const ModelParams& params, const QuantumNumbers& qn,
                                     const RadialGrid& grid) {
  return sample(Eigenfunction(params, qn), grid);
}

double norm_squared(const SampledFunction& f) {
  const auto w = numerics::simpson_weights(f.size(), f.spacing());
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += w[i] * std::norm(f.amplitudes()[i]);
  return sum;
}

Normalized normalize(const SampledFunction& f) {
  const double n2 = norm_squared(f);
  if (!std::isfinite(n2) || !(n2 > 0.0)) throw NumericalError("normalize: norm is zero or not finite");
  const double scale = 1.0 / std::sqrt(n2);
  std::vector<std::complex<double>> y(f.amplitudes());
  for (auto& v : y) v *= scale;
  return {SampledFunction(f.abscissae(), std::move(y), f.domain()), scale};
}

SampledDensity probability_density(const SampledFunction& f) {
  SampledDensity d;
  d.abscissae = f.abscissae();
  d.domain = f.domain();
  d.values.reserve(f.size());
  for (const auto& v : f.amplitudes()) d.values.push_back(std::norm(v));
  return d;
}

int count_sign_changes(const SampledFunction& f) {
  int changes = 0;
  int previous = 0;
  for (const auto& v : f.amplitudes()) {
    const int sign = v.real() > 0.0 ? 1 : (v.real() < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

OdeResidual radial_equation_residual(const Eigenfunction& ef, const SampledFunction& psi,
                                     double density_floor) {
  const double h = psi.spacing();
  const auto& r = psi.abscissae();
  const auto& y = psi.amplitudes();
  const std::size_t n = psi.size();
  if (n < 5) throw DomainError("radial_equation_residual: need at least five samples");

  std::vector<double> radial(n);
  double peak = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    radial[j] = y[j].real() * std::sqrt(2.0 * std::numbers::pi * r[j]);
    peak = std::max(peak, std::norm(y[j]));
  }

  const auto& set = ef.state().set;
  const double delta = ef.params().delta;
  const double eps = set.epsilon;
  OdeResidual out;
  for (std::size_t j = 2; j + 2 < n; ++j) {
    if (std::norm(y[j]) < density_floor * peak) continue;
    const double d1 = (-radial[j + 2] + 8.0 * radial[j + 1] - 8.0 * radial[j - 1] + radial[j - 2]) / (12.0 * h);
    const double d2 = (-radial[j + 2] + 16.0 * radial[j + 1] - 30.0 * radial[j] + 16.0 * radial[j - 1] -
                       radial[j - 2]) / (12.0 * h * h);
    const double s = std::exp(-delta * r[j]);
    const double t = -std::expm1(-delta * r[j]);
    // The equation multiplied through by s^2: s^2 R_ss + s R_s + Q(s) R / (1-s)^2.
    const double second = (d2 + delta * d1) / (delta * delta);
    const double first = -d1 / delta;
    const double q = -(eps + set.beta0 + set.beta2) * s * s + (2.0 * eps + set.beta0 - set.beta1) * s -
                     (eps + set.eta);
    const double potential = q * radial[j] / (t * t);
    const double scale = std::abs(second) + std::abs(first) + std::abs(potential);
    if (scale == 0.0) continue;
    out.max_relative = std::max(out.max_relative, std::abs(second + first + potential) / scale);
    ++out.points_checked;
  }
  return out;
}

}  // namespace abring
