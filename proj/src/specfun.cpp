#include "abring/specfun.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "abring/error.hpp"

namespace abring::specfun {

namespace {

constexpr int kMaxTerms = 100000;
constexpr double kTermTolerance = 1e-15;

std::optional<int> non_positive_integer(double x) {
  if (x > 0.0) return std::nullopt;
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9 * std::max(1.0, std::abs(x))) return std::nullopt;
  return static_cast<int>(-r);
}

}  // namespace

int terminating_degree(double a, double b) {
  const auto da = non_positive_integer(a);
  const auto db = non_positive_integer(b);
  if (da && db) return std::min(*da, *db);
  if (da) return *da;
  if (db) return *db;
  return -1;
}

double hypergeometric_2f1(const HypergeometricParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) || !std::isfinite(p.s)) {
    throw DomainError("hypergeometric_2f1: non-finite argument");
  }
  const int degree = terminating_degree(p.a, p.b);
  const auto c_pole = non_positive_integer(p.c);

  if (degree >= 0) {
    if (c_pole && *c_pole < degree) {
      throw DomainError("hypergeometric_2f1: c is a non-positive integer reached before termination");
    }
    // Snap the terminating parameter so the last ratio is exactly zero.
    const auto da = non_positive_integer(p.a);
    const bool a_terminates = da && *da == degree;
    // Extended precision: the alternating polynomial cancels badly near its zeros and as s -> 1.
    using wide = long double;
    const wide a = a_terminates ? -static_cast<wide>(degree) : p.a;
    const wide b = a_terminates ? static_cast<wide>(p.b) : -static_cast<wide>(degree);
    wide term = 1.0L;
    wide sum = 1.0L;
    for (int k = 0; k < degree; ++k) {
      term *= (a + k) * (b + k) / ((p.c + k) * (k + 1.0L)) * p.s;
      sum += term;
    }
    return static_cast<double>(sum);
  }

  if (c_pole) throw DomainError("hypergeometric_2f1: c is a non-positive integer");
  if (!(p.s >= 0.0 && p.s < 1.0)) {
    throw DomainError("hypergeometric_2f1: non-terminating series needs s in [0, 1)");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0)) * p.s;
    sum += term;
    if (std::abs(term) <= kTermTolerance * std::abs(sum)) return sum;
  }
  throw NumericalError("hypergeometric_2f1: series did not converge in 1e5 terms");
}

}  // namespace abring::specfun
