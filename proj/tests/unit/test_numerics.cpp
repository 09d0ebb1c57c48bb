#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "abring/error.hpp"
#include "abring/numerics.hpp"

using namespace abring;
using namespace abring::numerics;

TEST_CASE("adaptive quadrature integrates a parabola exactly") {
  for (Rule rule : {Rule::Simpson, Rule::GaussLegendre}) {
    const auto r = integrate([](double x) { return x * x; }, 0.0, 1.0, {rule});
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("adaptive quadrature converges on smooth transcendental integrands") {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(std::abs(r.value - 2.0) < 1e-12);
  const auto g = integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0, {Rule::GaussLegendre});
  CHECK(std::abs(g.value - std::sqrt(std::numbers::pi)) < 1e-12);
}

TEST_CASE("quadrature reports non-convergence with the last estimate") {
  QuadratureSpec spec;
  spec.max_depth = 3;
  spec.tolerance = 1e-15;
  try {
    integrate([](double x) { return 1.0 / std::sqrt(x + 1e-12); }, 0.0, 1.0, spec);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.kind() == ErrorKind::Numerical);
    CHECK(std::isfinite(e.last_estimate));
  }
}

TEST_CASE("quadrature rejects empty or reversed ranges") {
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0), DomainError);
}

TEST_CASE("semi-infinite integral of a decaying exponential") {
  const auto r = integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0);
  CHECK(std::abs(r.value - 1.0) < 1e-12);
  CHECK_THROWS_AS(decay_cutoff([](double) { return 1.0; }, 0.0), NumericalError);
}

TEST_CASE("composite Simpson weights are exact for cubics, even and odd interval counts") {
  for (std::size_t n : {5u, 6u, 101u, 102u}) {
    const double h = 2.0 / static_cast<double>(n - 1);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = -1.0 + h * static_cast<double>(i);
      f[i] = x * x * x + 2.0 * x * x + 1.0;
    }
    CHECK(simpson(f, h) == doctest::Approx(2.0 + 4.0 / 3.0).epsilon(1e-13));
  }
  const auto w = simpson_weights(2, 0.5);
  CHECK(w[0] == doctest::Approx(0.25));
  CHECK(w[1] == doctest::Approx(0.25));
  CHECK_THROWS_AS(simpson_weights(1, 1.0), DomainError);
}

TEST_CASE("Gauss-Legendre rule of order n integrates degree 2n-1 exactly") {
  for (int order : {1, 2, 5, 8, 16}) {
    const auto g = gauss_legendre(order);
    double sum_w = 0.0;
    double moment = 0.0;
    const int degree = 2 * order - 2;  // even moment: int x^d = 2/(d+1)
    for (int i = 0; i < order; ++i) {
      sum_w += g.weights[i];
      moment += g.weights[i] * std::pow(g.nodes[i], degree);
    }
    CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(moment == doctest::Approx(2.0 / (degree + 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("bisection finds sqrt(2)") {
  const auto r = bisect_bracket([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-13);
  CHECK(std::abs(r.root - std::sqrt(2.0)) < 1e-12);
  CHECK(r.lo <= r.root);
  CHECK(r.root <= r.hi);
  CHECK(r.iterations > 30);
}

TEST_CASE("bisection stops at machine resolution when the tolerance is zero") {
  const double root = bisect([](double x) { return x - 1.0 / 3.0; }, 0.0, 1.0, 0.0);
  CHECK(std::abs(root - 1.0 / 3.0) <= 1e-16);
}

TEST_CASE("bisection rejects brackets without a sign change") {
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), DomainError);
  CHECK_THROWS_AS(bisect([](double x) { return x; }, 1.0, -1.0, 1e-12), DomainError);
}

TEST_CASE("truncated and semi-infinite exponential integrals") {
  CHECK(std::abs(integrate([](double x) { return std::exp(-x); }, 0.0, 50.0).value - 1.0) < 1e-10);
  const auto r = integrate_to_infinity([](double x) { return x * std::exp(-2.0 * x); }, 0.0);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("bisection on a linear function") {
  CHECK(bisect([](double x) { return x - 1.0; }, 0.0, 2.0, 1e-14) == doctest::Approx(1.0).epsilon(1e-14));
}
