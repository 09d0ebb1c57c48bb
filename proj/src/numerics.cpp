#include "abring/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "abring/error.hpp"

namespace abring::numerics {

namespace {

double composite_simpson(const RealFunction& f, double a, double b, int panels) {
  const int intervals = 2 * panels;
  const double h = (b - a) / intervals;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < intervals; ++i) {
    const double v = f(a + i * h);
    (i % 2 ? odd : even) += v;
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

double composite_gauss(const RealFunction& f, double a, double b, int panels, const GaussRule& rule) {
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    }
    sum += 0.5 * width * panel;
  }
  return sum;
}

}  // namespace

GaussRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    // Chebyshev guess, then Newton on P_order.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

Integral integrate(const RealFunction& f, double a, double b, const QuadratureSpec& spec) {
  if (!(a < b)) throw DomainError("integrate: require a < b");
  if (!(spec.tolerance > 0.0)) throw DomainError("integrate: tolerance must be positive");
  if (spec.panels < 1) throw DomainError("integrate: panels must be >= 1");

  const GaussRule rule = spec.rule == Rule::GaussLegendre ? gauss_legendre(8) : GaussRule{};
  // Richardson factor: Simpson error drops by 2^4 per halving; 8-point Gauss by 2^16.
  const double order_gain = spec.rule == Rule::Simpson ? 15.0 : 65535.0;
  auto estimate = [&](int panels) {
    return spec.rule == Rule::Simpson ? composite_simpson(f, a, b, panels)
                                      : composite_gauss(f, a, b, panels, rule);
  };

  int panels = spec.panels;
  double previous = estimate(panels);
  double error = 0.0;
  for (int depth = 0; depth < spec.max_depth; ++depth) {
    panels *= 2;
    const double current = estimate(panels);
    error = std::abs(current - previous) / order_gain;
    const double extrapolated = current + (current - previous) / order_gain;
    if (!std::isfinite(current)) throw NumericalError("integrate: non-finite integrand");
    if (error <= std::max(spec.tolerance * std::abs(extrapolated), spec.tolerance)) {
      return {extrapolated, error};
    }
    previous = current;
  }
  throw ConvergenceError("integrate: no convergence after " + std::to_string(spec.max_depth) +
                             " refinements",
                         previous, error);
}

double decay_cutoff(const RealFunction& f, double a, double cutoff_ratio, double initial_length) {
  constexpr int kSamples = 64;
  double length = initial_length;
  double peak = 0.0;
  for (int attempt = 0; attempt < 60; ++attempt) {
    double tail = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
      const double v = std::abs(f(a + length * i / kSamples));
      peak = std::max(peak, v);
      if (i >= kSamples - kSamples / 8) tail = std::max(tail, v);
    }
    if (peak > 0.0 && tail < cutoff_ratio * peak) return a + length;
    length *= 2.0;
  }
  throw NumericalError("decay_cutoff: integrand does not decay");
}

Integral integrate_to_infinity(const RealFunction& f, double a, const QuadratureSpec& spec,
                               double cutoff_ratio) {
  const double b = decay_cutoff(f, a, cutoff_ratio);
  return integrate(f, a, b, spec);
}

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n < 2) throw DomainError("simpson_weights: need at least two samples");
  std::vector<double> w(n, 0.0);
  if (n == 2) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  const std::size_t intervals = n - 1;
  // Simpson 1/3 over an even number of leading intervals, 3/8 over the last three if odd.
  std::size_t simpson_end = intervals;
  if (intervals % 2 == 1) {
    if (intervals == 1) {
      w[0] = w[1] = 0.5 * h;
      return w;
    }
    simpson_end = intervals - 3;
  }
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (simpson_end != intervals) {
    const std::size_t s = simpson_end;
    w[s] += 3.0 * h / 8.0;
    w[s + 1] += 9.0 * h / 8.0;
    w[s + 2] += 9.0 * h / 8.0;
    w[s + 3] += 3.0 * h / 8.0;
  }
  return w;
}

double simpson(std::span<const double> samples, double h) {
  const auto w = simpson_weights(samples.size(), h);
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) sum += w[i] * samples[i];
  return sum;
}

BisectionResult bisect_bracket(const RealFunction& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("bisect: require lo < hi");
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0};
  if (fhi == 0.0) return {hi, hi, hi, 0};
  if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi)) {
    throw DomainError("bisect: bracket has no sign change");
  }
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    ++iterations;
    if (fm == 0.0) return {mid, mid, mid, iterations};
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {lo + 0.5 * (hi - lo), lo, hi, iterations};
}

}  // namespace abring::numerics
