#pragma once

namespace abring::specfun {

struct HypergeometricParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double s = 0.0;
};

/// Gauss series 2F1(a, b; c; s) = sum_k (a)_k (b)_k / ((c)_k k!) s^k.
///
/// When a or b is a non-positive integer the series is a polynomial and is summed
/// exactly by forward recurrence on the term ratio. Otherwise the series is summed
/// until the term falls below 1e-15 of the partial sum, which needs s in [0, 1).
/// Throws DomainError if the argument is outside that range or a non-positive
/// integer c is reached before termination.
double hypergeometric_2f1(const HypergeometricParams& p);

inline double hypergeometric_2f1(double a, double b, double c, double s) {
  return hypergeometric_2f1(HypergeometricParams{a, b, c, s});
}

/// Degree of the terminating polynomial, or -1 for a non-terminating series.
int terminating_degree(double a, double b);

}  // namespace abring::specfun
