#include "wvn/model_system.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wvn {

namespace {

void check_invertible(const Mat2C& b, std::int64_t n) {
  if (std::abs(b.det()) < 1e-14)
    throw std::domain_error("model system: B_" + std::to_string(n) +
                            " is singular; such inputs are rejected, not skipped");
}

} // namespace

ModelParams::ModelParams(double beta_, double epsilon_, ModelRemainder rem)
    : beta(beta_), epsilon(epsilon_), remainder(std::move(rem)) {
  if (!(beta > 0.0)) throw std::domain_error("ModelParams: beta must be > 0");
  if (!(std::abs(epsilon) < 2.0 * std::numbers::pi))
    throw std::domain_error("ModelParams: epsilon must lie in (-2 pi, 2 pi)");
}

Mat2C model_step(const ModelParams& m, std::int64_t n) {
  if (n < 1) throw std::domain_error("model_step: n must be >= 1");
  const double amp = m.beta / static_cast<double>(n);
  Mat2C b = Mat2C::identity() +
            rotation_reflection(m.epsilon * static_cast<double>(n)) * Complex(amp);
  if (!m.remainder.is_zero()) b += m.remainder(n);
  return b;
}

ProductResult product_phi(const ModelParams& m, std::int64_t N) {
  if (m.epsilon == 0.0)
    throw std::domain_error("product_phi: eps = 0 is the scaled regime; use product_phi0");
  if (N < 1) throw std::domain_error("product_phi: N must be >= 1");

  Mat2C prod = Mat2C::identity();
  Mat2C half = Mat2C::identity();
  const std::int64_t half_n = N / 2;
  for (std::int64_t n = 1; n <= N; ++n) {
    const Mat2C b = model_step(m, n);
    check_invertible(b, n);
    prod = b * prod;
    if (n == half_n) half = prod;
  }
  return {prod, N, (prod - half).frobenius_norm(), false};
}

ProductResult product_phi0(const ModelParams& m, std::int64_t N) {
  if (m.epsilon != 0.0)
    throw std::domain_error("product_phi0: requires eps = 0");
  if (N < 2) throw std::domain_error("product_phi0: N must be >= 2");

  Mat2C prod = Mat2C::identity();
  Mat2C scaled_half = Mat2C::identity();
  const std::int64_t half_n = N / 2;
  for (std::int64_t n = 1; n <= N; ++n) {
    const Mat2C b = model_step(m, n);
    check_invertible(b, n);
    prod = b * prod;
    if (n == half_n)
      scaled_half = prod * Complex(std::pow(static_cast<double>(half_n), -m.beta));
  }
  const Mat2C scaled = prod * Complex(std::pow(static_cast<double>(N), -m.beta));
  return {scaled, N, (scaled - scaled_half).frobenius_norm(), false};
}

std::int64_t model_n_min(double eps) {
  const double a = std::abs(eps);
  if (!(a > 0.0)) throw std::domain_error("model_n_min: eps must be nonzero");
  return std::max<std::int64_t>(1000, static_cast<std::int64_t>(std::ceil(4000.0 / a)));
}

ProductResult product_phi_pm(const ModelParams& m, Side side,
                             const std::vector<double>& eps_sequence) {
  if (eps_sequence.size() < 3)
    throw std::domain_error("product_phi_pm: need at least three eps values");
  for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
    if (!(eps_sequence[i] > 0.0))
      throw std::domain_error("product_phi_pm: eps values must be positive");
    if (i > 0 && !(eps_sequence[i] < eps_sequence[i - 1]))
      throw std::domain_error("product_phi_pm: eps sequence must be strictly decreasing");
  }

  const double sgn = (side == Side::plus) ? 1.0 : -1.0;
  std::vector<Mat2C> scaled;
  scaled.reserve(eps_sequence.size());
  std::int64_t last_n = 0;
  for (const double eps : eps_sequence) {
    ModelParams at{m.beta, sgn * eps, m.remainder};
    last_n = model_n_min(eps);
    const auto r = product_phi(at, last_n);
    scaled.push_back(r.matrix * Complex(std::pow(eps, m.beta)));
  }

  const std::size_t k = scaled.size() - 1;
  const Mat2C d1 = scaled[k - 1] - scaled[k - 2];
  const Mat2C d2 = scaled[k] - scaled[k - 1];
  const double n1 = d1.frobenius_norm();
  const double n2 = d2.frobenius_norm();

  ProductResult out;
  out.n_terms = last_n;
  out.convergence_estimate = n1 + n2;
  out.warning = !(n2 < n1); // spread must keep shrinking along the sequence
  if (n1 > 0.0 && n2 < n1) {
    const double s = n2 / n1; // contraction ratio of the geometric error model
    out.matrix = scaled[k] + d2 * Complex(s / (1.0 - s));
  } else {
    out.matrix = scaled[k];
  }
  return out;
}

double rank_one_defect(const Mat2C& m) {
  const auto [s1, s2] = singular_values(m);
  if (s1 <= 0.0) return 0.0;
  return s2 / s1;
}

} // namespace wvn
