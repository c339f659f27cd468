#pragma once

#include <cstdint>

#include "wvn/mat2.hpp"

namespace wvn {

/// Proven upper bound 1/(n |sin(xi/2)|) for |sum_{k>=n} e^{i k xi} / k|.
/// Throws std::domain_error when xi is within 1e-12 of 2*pi*Z.
double tail_sum_bound(double xi, std::int64_t n);

struct OscillatoryTail {
  Complex value;
  double bound; // certified truncation-error bound for |value - exact|
};

/// S(xi, m) = sum_{k>=m} e^{i k xi} / k, evaluated by iterated summation by
/// parts (Abel transform): each pass trades a factor 1/(1 - e^{i xi}) for one
/// extra power of 1/k, and the final absolutely convergent series is truncated
/// with a rigorous tail bound. The reported bound covers the truncation error.
///
/// Throws std::domain_error when xi is within 1e-12 of 2*pi*Z, and
/// ConvergenceError (carrying the best bound achieved) when tol is not
/// reachable within the term budget.
OscillatoryTail oscillatory_log_tail(double xi, std::int64_t m, double tol);

} // namespace wvn
