#pragma once

#include <cstddef>
#include <vector>

namespace wvn {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
};

/// Ordinary least squares y ~ slope * x + intercept. Needs >= 2 points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

enum class FitSide { left, right };

struct PowerLawFit {
  double exponent = 0.0;
  double log_prefactor = 0.0;
  double residual_rms = 0.0;
  int points_used = 0;
  FitSide side = FitSide::right;
  bool dropped_head = false; // the two largest-x points were excluded
  int excluded_points = 0;   // grid points lost to convergence failures
};

/// Fits log y ~ exponent * log x + log_prefactor. When the fit over all
/// points is at least twice as noisy as one without the two largest x
/// (pre-asymptotic head), the reduced fit wins. x and y must be positive.
PowerLawFit fit_log_log(const std::vector<double>& x, const std::vector<double>& y);

/// Sample Pearson correlation; 0 for degenerate inputs.
double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b);

} // namespace wvn
