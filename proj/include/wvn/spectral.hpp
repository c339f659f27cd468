#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wvn/harris_lutz.hpp"
#include "wvn/potential.hpp"
#include "wvn/power_law.hpp"

namespace wvn {

/// A critical (resonance) point nu = +-2 cos(omega) with its phi companion
/// and the exponents the theory predicts there.
struct CriticalPoint {
  double nu;
  double side_phi; // omega1 (plus) or pi - omega1 (minus)
  Side side;
  double predicted_exponent;     // |c| / (2 |sin omega|), the density zero order
  double predicted_gev_exponent; // |c| / (4 sin omega1), half of the above
};

/// Requires p.resonant(); throws otherwise.
CriticalPoint critical_point(const PotentialParams& p, Side side);

enum class DensityRoute { phat_plus, phat_minus, amplitude };

struct DensityValue {
  double rho_prime;
  double error_estimate;
  bool converged;
  DensityRoute route;
};

/// Spectral density at lambda in (-2, 2) away from the critical points.
/// Inside U+-, rho'(2 cos phi) = 1 / (4 pi sin(phi) ||p-hat_inf(phi)||^2);
/// outside, the polynomial-amplitude route is used. N = 0 picks
/// max(2e4, N_min(phi)) automatically.
DensityValue spectral_density(const PotentialParams& p, double lambda, std::int64_t N = 0,
                              double tol = 1e-4);

struct AmplitudeDensity {
  double rho_prime;
  double error_estimate;
  double amplitude; // oscillation amplitude A of P_n over the trailing window
  double f_abs;     // |F| = A sin(phi)
  bool converged;
};

/// Independent density route via the orthogonal-polynomial oscillation
/// amplitude: P_n ~ (|F|/sin phi) cos(phi n + psi) at regular points, so a
/// harmonic least-squares fit of the trailing window at the known frequency
/// recovers A, and rho' = sqrt(4 - lambda^2) / (2 pi |F|^2).
AmplitudeDensity amplitude_oracle_density(const PotentialParams& p, double lambda,
                                          std::int64_t N = 0);

struct GevFit {
  double exponent_plus;  // dominant growth exponent of generic solutions
  double exponent_minus; // subdominant, via the det = 1 complement of the product
  double residual_rms;
  double correlation;    // |corr| of u_n / n^beta with the predicted oscillatory factor
};

/// Envelope fit of the recurrence at lambda = nu over the decade [N/10, N],
/// two random initial conditions; the subdominant exponent comes from the
/// singular values of the accumulated 2x2 product (det = 1).
GevFit gev_exponent_fit(const PotentialParams& p, const CriticalPoint& crit,
                        std::int64_t N = 1'000'000, std::uint64_t seed = 0x5eedULL);

/// eps_k = 0.2 * 2^{-k}, k = 0..7.
std::vector<double> default_eps_grid();

struct DensityScanRow {
  double lambda;
  double phi;
  double rho_prime;
  double error_estimate;
  std::string flags; // "ok", "nonconv", "critical"
};

/// Power-law fit of rho' against |lambda - nu| on one side of the critical
/// point, over the grid lambda_k = 2 cos(side_phi -+ eps_k / 2). Checks first
/// that the point is regular. Grid points that fail to converge are excluded
/// and counted in the result. rows_out, when given, receives the evaluated
/// grid in CSV-row form.
PowerLawFit pseudogap_fit(const PotentialParams& p, const CriticalPoint& crit, FitSide side,
                          std::vector<double> eps_grid = default_eps_grid(),
                          double tol = 1e-4, std::vector<DensityScanRow>* rows_out = nullptr);

enum class PointClass { regular, half_bound_state, eigenvalue };

struct Classification {
  PointClass cls;
  double ratio;    // scaled limit over the trajectory-wide maximum
  bool borderline; // ratio within an order of magnitude of the threshold
  Vec2C scaled_vector;
};

struct ScaledLimit {
  Vec2C vector; // trailing average of p-hat_n / n^beta
  double ratio;
};

/// Scaled limit p-hat_n / n^beta at the critical angle; its vanishing marks
/// the exceptional phases (eigenvalue / half-bound state).
ScaledLimit critical_scaled_limit(const PotentialParams& p, const CriticalPoint& crit,
                                  std::int64_t N = 200'000);

Classification classify_critical_point(const PotentialParams& p, const CriticalPoint& crit,
                                       std::int64_t N = 200'000, double tol = 1e-3);

/// Density over a uniform lambda grid; points are independent and evaluated
/// concurrently, rows assembled in grid order.
std::vector<DensityScanRow> density_scan(const PotentialParams& p, double lambda_min,
                                         double lambda_max, int count, std::int64_t N = 0,
                                         double tol = 1e-4);

} // namespace wvn
