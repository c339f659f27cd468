#pragma once

#include <cstdint>
#include <vector>

#include "wvn/harris_lutz.hpp" // Side
#include "wvn/mat2.hpp"
#include "wvn/qseq.hpp"

namespace wvn {

/// Summable remainder family R_n = seq(n) * direction, with the bound
/// sequence r_n = |seq(n)| * ||direction|| supplied implicitly.
struct ModelRemainder {
  QSequence seq = QSequence::zero();
  Mat2C direction = Mat2C::zero();

  static ModelRemainder none() { return {}; }
  static ModelRemainder scaled(QSequence s, Mat2C dir) { return {std::move(s), dir}; }

  bool is_zero() const { return seq.is_zero(); }
  Mat2C operator()(std::int64_t n) const {
    if (is_zero()) return Mat2C::zero();
    return direction * Complex(seq(n));
  }
  double bound(std::int64_t n) const {
    return is_zero() ? 0.0 : std::abs(seq(n)) * direction.frobenius_norm();
  }
};

/// Parameters of the model step B_n(eps) = I + (beta/n) [[cos(eps n), sin(eps n)],
/// [sin(eps n), -cos(eps n)]] + R_n.
struct ModelParams {
  double beta;
  double epsilon;
  ModelRemainder remainder;

  ModelParams(double beta_, double epsilon_, ModelRemainder rem = ModelRemainder::none());
};

Mat2C model_step(const ModelParams& m, std::int64_t n);

struct ProductResult {
  Mat2C matrix;
  std::int64_t n_terms = 0;
  double convergence_estimate = 0.0;
  bool warning = false;
};

/// Ordered product B_N ... B_2 B_1 (newest factor on the left, consistent with
/// x_{n+1} = B_n x_n). Requires eps != 0; the eps = 0 scaling is product_phi0.
/// convergence_estimate compares the N-product with the N/2-product.
ProductResult product_phi(const ModelParams& m, std::int64_t N);

/// N^{-beta} * product of B_n(0); the scaled limit has rank one.
ProductResult product_phi0(const ModelParams& m, std::int64_t N);

/// One-sided scaled limits: evaluates |eps|^beta Phi(beta, +-eps, R) along the
/// decreasing sequence and extrapolates the last three values; the spread of
/// those values is the convergence estimate, and a non-contracting spread sets
/// the warning flag.
ProductResult product_phi_pm(const ModelParams& m, Side side,
                             const std::vector<double>& eps_sequence);

/// Trajectory length for a given eps so the product has left the
/// resonance-dominated regime.
std::int64_t model_n_min(double eps);

/// sigma2/sigma1, 0 for exact rank <= 1 (and for the zero matrix).
double rank_one_defect(const Mat2C& m);

} // namespace wvn
