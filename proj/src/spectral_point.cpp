#include "wvn/spectral_point.hpp"

#include <cmath>
#include <stdexcept>

namespace wvn {

SpectralPoint lambda_to_point(double lambda) {
  if (!(lambda > -2.0 && lambda < 2.0))
    throw std::domain_error("lambda_to_point: lambda must lie in (-2, 2)");
  const double phi = std::acos(lambda / 2.0);
  const double s = std::sqrt(4.0 - lambda * lambda);
  return {lambda, phi, Complex(lambda / 2.0, s / 2.0)};
}

double phi_to_lambda(double phi) { return 2.0 * std::cos(phi); }

} // namespace wvn
