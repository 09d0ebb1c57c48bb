#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "abring/entropy.hpp"
#include "abring/error.hpp"

using namespace abring;

namespace {

SampledDensity density_on(double lo, double hi, std::size_t n, Domain domain, double (*f)(double)) {
  SampledDensity d;
  d.domain = domain;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    d.abscissae.push_back(x);
    d.values.push_back(f(x));
  }
  return d;
}

double normal(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }
double box(double) { return 0.25; }

ModelParams reference_point() {
  ModelParams p;
  p.delta = 0.2;
  p.v1 = 20.0;
  p.b_field = 0.5;
  p.xi = 0.3;
  p.alpha = 0.7;
  return p;
}

}  // namespace

TEST_CASE("BBM constant") {
  CHECK(kBbmBound == doctest::Approx(2.14473).epsilon(1e-6));
  const auto r = bbm_check(1.0, 1.2);
  CHECK(r.sum == doctest::Approx(2.2));
  CHECK(r.margin == doctest::Approx(2.2 - kBbmBound));
  CHECK(r.pass);
  CHECK_FALSE(bbm_check(1.0, 1.0).pass);
  CHECK(bbm_check(1.0, kBbmBound - 1.0 - 0.5e-3).pass);
}

TEST_CASE("entropy of a standard normal is (1 + ln 2 pi) / 2") {
  const auto rho = density_on(-12.0, 12.0, 4001, Domain::Position, normal);
  CHECK(shannon_entropy(rho) == doctest::Approx(0.5 * (1.0 + std::log(2.0 * std::numbers::pi))).epsilon(1e-10));
}

TEST_CASE("entropy of a uniform density is the log of its width") {
  CHECK(shannon_entropy(density_on(0.0, 4.0, 101, Domain::Position, box)) == doctest::Approx(std::log(4.0)));
}

TEST_CASE("compressing a density by a lowers its entropy by ln a") {
  const double a = 3.0;
  auto rho = density_on(-12.0, 12.0, 4001, Domain::Position, normal);
  auto squeezed = rho;
  for (std::size_t i = 0; i < rho.values.size(); ++i) {
    squeezed.abscissae[i] = rho.abscissae[i] / a;
    squeezed.values[i] = a * rho.values[i];
  }
  CHECK(shannon_entropy(squeezed) == doctest::Approx(shannon_entropy(rho) - std::log(a)).epsilon(1e-12));
}

TEST_CASE("entropy preconditions") {
  auto rho = density_on(0.0, 4.0, 101, Domain::Position, box);
  rho.values[3] = -1e-3;
  CHECK_THROWS_AS(shannon_entropy(rho), DomainError);
  auto heavy = density_on(0.0, 4.0, 101, Domain::Position, box);
  for (auto& v : heavy.values) v *= 1.01;
  CHECK_THROWS_AS(shannon_entropy(heavy), DomainError);
  const auto k = density_on(0.0, 4.0, 101, Domain::Momentum, box);
  CHECK_THROWS_AS(shannon_position(k), DomainError);
  CHECK_NOTHROW(shannon_momentum(k));
  auto uneven = density_on(0.0, 4.0, 101, Domain::Position, box);
  uneven.abscissae[50] += 0.01;
  CHECK_THROWS_AS(shannon_entropy(uneven), DomainError);
}

TEST_CASE("pipeline against independent position and momentum oracles") {
  PipelineOptions options;
  options.check_convergence = true;
  const auto r = entropy_pipeline(reference_point(), {1, 1}, options);
  REQUIRE(r.state.exists);
  // Position: adaptive quadrature of the continuous density at 30 digits.
  CHECK(r.report.s_r == doctest::Approx(0.99259333992426981).epsilon(1e-7));
  // Momentum: zero-padded FFT of a finely sampled eigenfunction.
  CHECK(r.report.s_k == doctest::Approx(1.9358218233502467).epsilon(1e-5));
  CHECK(r.report.pass);
  CHECK(r.report.norm_residual_r < 1e-8);
  CHECK(r.report.norm_residual_k < 1e-4);
  CHECK_FALSE(r.diagnostics.under_resolved);
  CHECK_FALSE(r.diagnostics.truncation_warning);
  CHECK(r.diagnostics.convergence_delta < 1e-4);
}

TEST_CASE("pipeline regression shared with an independent prototype") {
  ModelParams p;
  p.delta = 0.1;
  p.v1 = 20.0;
  p.b_field = 1.0;
  p.set_phi_ab(1.0);
  const auto r = entropy_pipeline(p, {0, 0});
  CHECK(r.report.s_r == doctest::Approx(1.4138).epsilon(1e-4));
  CHECK(r.report.s_k == doctest::Approx(0.7641).epsilon(1e-4));
  CHECK(r.report.s_r == doctest::Approx(1.413764).epsilon(1e-6));
  CHECK(r.report.s_k == doctest::Approx(0.764070).epsilon(1e-6));
}

TEST_CASE("rescaling the screening length shifts the entropies by the log of the scale") {
  // Scaling delta, v1 and B by c leaves every dimensionless coupling unchanged, so the
  // eigenfunction depends on c r only: S_r shifts by -ln c, S_k by +ln c, E by c^2.
  ModelParams p = reference_point();
  ModelParams q = p;
  const double c = 1.7;
  q.delta *= c;
  q.v1 *= c;
  q.b_field *= c;
  const auto a = entropy_pipeline(p, {0, 1});
  const auto b = entropy_pipeline(q, {0, 1});
  CHECK(b.report.s_r == doctest::Approx(a.report.s_r - std::log(c)).epsilon(1e-6));
  CHECK(b.report.s_k == doctest::Approx(a.report.s_k + std::log(c)).epsilon(1e-6));
  CHECK(b.state.energy == doctest::Approx(a.state.energy * c * c).epsilon(1e-12));
}

TEST_CASE("pipeline errors name the failing stage") {
  ModelParams p;
  p.v1 = 1.0;
  p.b_field = 4.0;
  p.set_phi_ab(1.0);
  try {
    entropy_pipeline(p, {0, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoBoundState);
  }
}

TEST_CASE("uniform densities") {
  CHECK(std::abs(shannon_entropy(density_on(0.0, 1.0, 11, Domain::Position, [](double) { return 1.0; }))) < 1e-15);
  CHECK(shannon_entropy(density_on(0.0, 2.0, 11, Domain::Position, [](double) { return 0.5; })) ==
        doctest::Approx(0.69315).epsilon(1e-5));
}

TEST_CASE("unit Gaussian position density") {
  const auto rho = density_on(-12.0, 12.0, 4001, Domain::Position,
                              [](double x) { return std::exp(-x * x) / std::sqrt(std::numbers::pi); });
  CHECK(shannon_entropy(rho) == doctest::Approx(1.07236).epsilon(1e-5));
}

TEST_CASE("BBM check on a large-margin row and limiting cases") {
  const auto row = bbm_check(1.32078, 2.91721);
  CHECK(row.sum == doctest::Approx(4.23799).epsilon(1e-9));
  CHECK(row.pass);
  const auto gauss = bbm_check(1.07236, 1.07236);
  CHECK(std::abs(gauss.margin) < 2e-5);
  CHECK(gauss.pass);
  CHECK_FALSE(bbm_check(0.0, 0.0).pass);
}
