#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace abring::numerics {

enum class Rule { Simpson, GaussLegendre };

struct QuadratureSpec {
  Rule rule = Rule::Simpson;
  int panels = 8;           // initial panel count, doubled on every refinement
  double tolerance = 1e-12;
  int max_depth = 24;
};

struct Integral {
  double value = 0.0;
  double error_estimate = 0.0;
};

using RealFunction = std::function<double(double)>;

/// Integrates f over [a, b], refining until two successive estimates agree to
/// max(tolerance * |value|, tolerance). Throws ConvergenceError otherwise.
Integral integrate(const RealFunction& f, double a, double b, const QuadratureSpec& spec = {});

/// Integrates a decaying f over [a, inf). The range is cut where |f| drops below
/// cutoff_ratio times the sampled peak.
Integral integrate_to_infinity(const RealFunction& f, double a, const QuadratureSpec& spec = {},
                               double cutoff_ratio = 1e-14);

/// Cutoff used by integrate_to_infinity, exposed for callers that sample on a grid.
double decay_cutoff(const RealFunction& f, double a, double cutoff_ratio = 1e-14,
                    double initial_length = 1.0);

/// Composite Simpson weights for n uniformly spaced samples with spacing h.
/// An odd number of intervals is closed with Simpson's 3/8 rule on the last three;
/// n == 2 degrades to the trapezoid rule.
std::vector<double> simpson_weights(std::size_t n, double h);

/// Composite Simpson on uniform samples.
double simpson(std::span<const double> samples, double h);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int order);

struct BisectionResult {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

/// Bisection on a sign-changing bracket. Stops when hi - lo <= tol or when the
/// midpoint is no longer representable between the endpoints.
BisectionResult bisect_bracket(const RealFunction& f, double lo, double hi, double tol);

inline double bisect(const RealFunction& f, double lo, double hi, double tol) {
  return bisect_bracket(f, lo, hi, tol).root;
}

}  // namespace abring::numerics
