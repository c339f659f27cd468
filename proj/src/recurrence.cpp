#include "wvn/recurrence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wvn {

namespace {

void check_phi(double phi) {
  if (!(phi > 0.0 && phi < std::numbers::pi))
    throw std::domain_error("transfer matrix: phi must lie strictly inside (0, pi)");
}

} // namespace

std::vector<double> orthogonal_polynomials(const PotentialParams& p, double lambda,
                                           std::int64_t N) {
  if (N < 2) throw std::domain_error("orthogonal_polynomials: N must be >= 2");
  std::vector<double> out(static_cast<std::size_t>(N));
  PolynomialSequence seq(p, lambda);
  out[0] = seq.value();
  out[1] = seq.next_value();
  for (std::int64_t n = 2; n < N; ++n) {
    seq.advance();
    out[static_cast<std::size_t>(n)] = seq.next_value();
  }
  return out;
}

Mat2C scalar_step_matrix(const PotentialParams& p, std::int64_t n, double lambda) {
  return {0.0, 1.0, -1.0, lambda - p.b(n)};
}

Mat2C variation_matrix(double phi, std::int64_t n) {
  check_phi(phi);
  const Complex zn = std::polar(1.0, phi * static_cast<double>(n));
  const Complex zn1 = std::polar(1.0, phi * static_cast<double>(n + 1));
  return {std::conj(zn), zn, std::conj(zn1), zn1};
}

Mat2C variation_matrix_inverse(double phi, std::int64_t n) {
  check_phi(phi);
  const Complex zn = std::polar(1.0, phi * static_cast<double>(n));
  const Complex zn1 = std::polar(1.0, phi * static_cast<double>(n + 1));
  const Complex d(0.0, 2.0 * std::sin(phi)); // det Y_n = 2 i sin(phi)
  return {zn1 / d, -zn / d, -std::conj(zn1) / d, std::conj(zn) / d};
}

Mat2C transfer_matrix(const PotentialParams& p, std::int64_t n, double phi) {
  check_phi(phi);
  const Complex kappa = p.b(n + 1) / Complex(0.0, 2.0 * std::sin(phi));
  const Complex e = std::polar(1.0, 2.0 * phi * static_cast<double>(n + 1));
  Mat2C m = Mat2C::identity();
  m.a11 += kappa;
  m.a12 += kappa * e;
  m.a21 -= kappa * std::conj(e);
  m.a22 -= kappa;
  return m;
}

Mat2C oscillatory_part(const PotentialParams& p, std::int64_t n, double phi) {
  check_phi(phi);
  const double a = p.abs_c();
  if (a == 0.0) return Mat2C::zero();
  const double sphi = std::sin(phi);
  const double m = static_cast<double>(n + 1);
  const double w1 = p.omega1();
  const double d1 = p.delta1();

  // Diagonal wave at frequencies +-2*omega1.
  const Complex diag = a * std::sin(2.0 * w1 * m + d1) / Complex(0.0, 2.0 * m * sphi);
  // Antidiagonal waves at 2(phi -+ omega1), amplitudes a / (4 (n+1) sin phi).
  const double t = a / (4.0 * m * sphi);
  const Mat2C low = antidiag_phase(2.0 * (phi - w1) * m - d1);
  const Mat2C high = antidiag_phase(2.0 * (phi + w1) * m + d1);

  Mat2C v = low * Complex(t) - high * Complex(t);
  v.a11 += diag;
  v.a22 -= diag;
  return v;
}

TransferParts transfer_matrix_parts(const PotentialParams& p, std::int64_t n, double phi) {
  check_phi(phi);
  TransferParts parts;
  parts.oscillatory = oscillatory_part(p, n, phi);

  const double qn = p.q()(n + 1);
  if (qn == 0.0) {
    parts.summable = Mat2C::zero();
  } else {
    const Complex kappa = qn / Complex(0.0, 2.0 * std::sin(phi));
    const Complex e = std::polar(1.0, 2.0 * phi * static_cast<double>(n + 1));
    parts.summable = {kappa, kappa * e, -kappa * std::conj(e), -kappa};
  }
  return parts;
}

} // namespace wvn
