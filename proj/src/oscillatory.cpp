#include "wvn/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wvn/errors.hpp"

namespace wvn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::int64_t kTermBudget = 20'000'000;

double reduce_angle(double xi) {
  // Into (-pi, pi]; e^{i k xi} is unchanged for integer k.
  double r = std::remainder(xi, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

// Falling-factorial coefficient a^{(r)}_k = 1 / (k (k-1) ... (k-r+1)).
double falling_coeff(std::int64_t k, int r) {
  double a = 1.0;
  for (int j = 0; j < r; ++j) a /= static_cast<double>(k - j);
  return a;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

} // namespace

double tail_sum_bound(double xi, std::int64_t n) {
  if (n < 1) throw std::domain_error("tail_sum_bound: n must be >= 1");
  const double r = reduce_angle(xi);
  if (std::abs(r) < 1e-12)
    throw std::domain_error("tail_sum_bound: xi must not lie in 2*pi*Z");
  return 1.0 / (static_cast<double>(n) * std::abs(std::sin(r / 2.0)));
}

OscillatoryTail oscillatory_log_tail(double xi, std::int64_t m, double tol) {
  if (m < 1) throw std::domain_error("oscillatory_log_tail: m must be >= 1");
  if (!(tol > 0.0)) throw std::domain_error("oscillatory_log_tail: tol must be > 0");
  const double r = reduce_angle(xi);
  if (std::abs(r) < 1e-12)
    throw std::domain_error("oscillatory_log_tail: xi must not lie in 2*pi*Z");

  const Complex eix = std::polar(1.0, r);
  const Complex one_minus = 1.0 - eix;
  const double denom = std::abs(one_minus); // = 2 |sin(xi/2)|

  // Below the beat scale (k |xi| < 1) the fold-back recursion subtracts
  // nearly equal quantities and each division by (1 - e^{i xi}) amplifies the
  // loss. Sum that stretch explicitly first; it is exact.
  Complex head(0.0, 0.0);
  const auto m_shift = static_cast<std::int64_t>(std::ceil(2.0 / denom));
  if (m_shift > m) {
    if (m_shift - m > kTermBudget)
      throw ConvergenceError("oscillatory_log_tail: beat scale exceeds the term budget",
                             tail_sum_bound(r, m));
    Complex phase = std::polar(1.0, r * static_cast<double>(m));
    for (std::int64_t k = m; k < m_shift; ++k) {
      head += phase / static_cast<double>(k);
      if ((k - m) % 1024 == 1023)
        phase = std::polar(1.0, r * static_cast<double>(k + 1));
      else
        phase *= eix;
    }
    m = m_shift;
  }

  // Truncating the depth-R transformed series at k leaves an error of at most
  // (R-2)! a^{(R-1)}_k / denom^{R-1} in S(xi, m). Pick the depth whose
  // predicted cutoff is cheapest.
  int best_r = 2;
  double best_cost = 1e300;
  for (int R = 2; R <= 6; ++R) {
    const double target = tol * std::pow(denom, R - 1) / factorial(R - 2);
    double k_est = std::pow(target, -1.0 / (R - 1)) + R + 1;
    if (!(k_est < 4e18)) k_est = 4e18;
    const double cost = std::max(0.0, k_est - static_cast<double>(m)) + 16.0 * R;
    if (cost < best_cost) {
      best_cost = cost;
      best_r = R;
    }
  }

  const int R = best_r;
  const std::int64_t m_top = m + R - 1; // start index of the depth-R series
  const std::int64_t cap = m_top + kTermBudget;
  const double bound_scale = factorial(R - 2) / std::pow(denom, R - 1);

  Complex s(0.0, 0.0);
  double a = falling_coeff(m_top, R);
  Complex phase = std::polar(1.0, r * static_cast<double>(m_top));
  double bound;
  for (std::int64_t k = m_top;; ++k) {
    s += phase * a;
    bound = bound_scale * a * static_cast<double>(k - R + 1); // a^{(R-1)}_k
    if (bound <= tol) break;
    if (k >= cap)
      throw ConvergenceError(
          "oscillatory_log_tail: tolerance unreachable within term budget", bound);
    a *= static_cast<double>(k - R + 1) / static_cast<double>(k + 1);
    if ((k - m_top) % 1024 == 1023)
      phase = std::polar(1.0, r * static_cast<double>(k + 1)); // re-anchor phase drift
    else
      phase *= eix;
  }

  // Fold back: S_r(m_r) = [e^{i m_r xi} a^{(r)}_{m_r} - r S_{r+1}(m_r+1)] / (1 - e^{i xi}).
  for (int rr = R - 1; rr >= 1; --rr) {
    const std::int64_t mr = m + rr - 1;
    const Complex top = std::polar(1.0, r * static_cast<double>(mr)) * falling_coeff(mr, rr);
    s = (top - static_cast<double>(rr) * s) / one_minus;
  }
  return {head + s, bound};
}

} // namespace wvn
