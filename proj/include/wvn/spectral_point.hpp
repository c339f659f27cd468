#pragma once

#include "wvn/mat2.hpp"

namespace wvn {

/// A point lambda in (-2, 2) together with phi in (0, pi) such that
/// lambda = 2 cos(phi), and the unit-circle companion z = e^{i phi}.
struct SpectralPoint {
  double lambda;
  double phi;
  Complex z;
};

/// Maps lambda in (-2, 2) to its companions; throws std::domain_error outside.
SpectralPoint lambda_to_point(double lambda);

/// Inverse map for phi in (0, pi).
double phi_to_lambda(double phi);

} // namespace wvn
