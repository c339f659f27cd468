#include "wvn/harris_lutz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wvn/errors.hpp"
#include "wvn/oscillatory.hpp"
#include "wvn/recurrence.hpp"
#include "wvn/spectral_point.hpp"

namespace wvn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCenterSnap = 1e-9;
constexpr std::int64_t kExplicitHead = 32;

double reduce_angle(double xi) {
  double r = std::remainder(xi, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

struct SideData {
  double sign;      // +1 for plus, -1 for minus
  double mu;        // resonant frequency 2(phi -+ omega1), reduced mod 2 pi
  double nu;        // the other antidiagonal frequency
  double phase_sgn; // resonant wave carries e^{i(mu k + phase_sgn * delta1)}
};

SideData side_data(const PotentialParams& p, Side side, double phi) {
  const double w1 = p.omega1();
  if (side == Side::plus)
    return {+1.0, reduce_angle(2.0 * (phi - w1)), 2.0 * (phi + w1), -1.0};
  return {-1.0, reduce_angle(2.0 * (phi + w1)), 2.0 * (phi - w1), +1.0};
}

void check_in_neighborhood(const PotentialParams& p, Side side, double phi) {
  if (!(phi > 0.0 && phi < kPi))
    throw std::domain_error("harris-lutz: phi must lie strictly inside (0, pi)");
  if (p.abs_c() == 0.0) return; // free oracle mode: no resonance anywhere
  if (!critical_neighborhood(p, side).contains(phi))
    throw std::domain_error("harris-lutz: phi lies outside the U neighborhood for this side");
}

// sum_{k>=K} of the summand, via exact tail identities. The near-resonant
// pair telescopes: sum [e^{i mu (k+1)}/((k+1) s_phi) - e^{i mu k}/(k s_w1)]
// = -e^{i mu K}/(K s_phi) - (1/s_w1 - 1/s_phi) S(mu, K).
Mat2C tail_matrix(const PotentialParams& p, Side side, std::int64_t K, double phi, double tol,
                  double& bound_out) {
  bound_out = 0.0;
  const double a = p.abs_c();
  if (a == 0.0) return Mat2C::zero();

  const SideData sd = side_data(p, side, phi);
  const double sphi = std::sin(phi);
  const double sw1 = p.sin_omega1();
  const double d1 = p.delta1();
  const Complex eid1 = std::polar(1.0, d1);

  const double pref_diag = a / (2.0 * sphi);
  const double pref_nu = a / (4.0 * sphi);
  const double pref_mu = (a / 4.0) * std::abs(1.0 / sw1 - 1.0 / sphi);
  const double share = tol / (3.0 * std::sqrt(2.0));

  // Diagonal wave at 2*omega1 (purely imaginary contribution).
  const auto s_diag = oscillatory_log_tail(2.0 * p.omega1(), K + 1, share / pref_diag);
  const double im = (eid1 * s_diag.value).imag();
  const Complex c11 = Complex(0.0, -pref_diag * im);
  double bound = std::sqrt(2.0) * pref_diag * s_diag.bound;

  // Non-resonant antidiagonal wave.
  const auto s_nu = oscillatory_log_tail(sd.nu, K + 1, share / pref_nu);
  Complex c12;
  if (side == Side::plus)
    c12 = -pref_nu * eid1 * s_nu.value;
  else
    c12 = pref_nu * std::conj(eid1) * s_nu.value;
  bound += std::sqrt(2.0) * pref_nu * s_nu.bound;

  // Near-resonant pair.
  const double prefH = 1.0 / sw1 - 1.0 / sphi;
  Complex h = -std::polar(1.0, sd.mu * static_cast<double>(K)) /
              Complex(static_cast<double>(K) * sphi);
  if (prefH != 0.0) {
    if (std::abs(sd.mu) < kCenterSnap) {
      // |S(mu, K)| <= |log(1 - e^{i mu})| + H_{K-1}; the prefactor is O(phi - center).
      const double s_abs = std::log(1.0 / std::max(std::abs(sd.mu), 1e-300)) +
                           std::log(static_cast<double>(K)) + 3.0;
      bound += std::sqrt(2.0) * (a / 4.0) * std::abs(prefH) * s_abs;
    } else {
      const auto s_mu = oscillatory_log_tail(sd.mu, K, share / std::max(pref_mu, 1e-300));
      h -= prefH * s_mu.value;
      bound += std::sqrt(2.0) * (a / 4.0) * std::abs(prefH) * s_mu.bound;
    }
  }
  const Complex resonant_phase = std::polar(1.0, sd.phase_sgn * d1);
  c12 += sd.sign * (a / 4.0) * resonant_phase * h;

  bound_out = bound;
  return {c11, c12, std::conj(c12), -c11};
}

} // namespace

CriticalNeighborhood critical_neighborhood(const PotentialParams& p, Side side) {
  const double w1 = p.omega1();
  const double hw = std::min({w1, kPi - w1, std::abs(kPi - 2.0 * w1)}) / 4.0;
  const double center = (side == Side::plus) ? w1 : kPi - w1;
  return {side, center, hw};
}

Mat2C constant_similarity() { return {1.0, Complex(0.0, 1.0), 1.0, Complex(0.0, -1.0)}; }

Mat2C phase_matrix(const PotentialParams& p, Side side) {
  const double half = p.delta1() / 2.0;
  const Complex e = std::polar(1.0, (side == Side::plus) ? half : -half);
  return Mat2C::diag(e, std::conj(e));
}

Mat2C reduced_basis(const PotentialParams& p, Side side) {
  return constant_similarity().inverse() * phase_matrix(p, side);
}

Mat2C harris_lutz_summand(const PotentialParams& p, Side side, std::int64_t k, double phi) {
  Mat2C t = oscillatory_part(p, k, phi);
  const double a = p.abs_c();
  if (a == 0.0) return t;
  const SideData sd = side_data(p, side, phi);
  const double amp = a / (4.0 * static_cast<double>(k) * p.sin_omega1());
  const Mat2C res =
      antidiag_phase(sd.mu * static_cast<double>(k) + sd.phase_sgn * p.delta1()) * Complex(amp);
  return t - res * Complex(sd.sign);
}

Mat2C reduced_resonant(const PotentialParams& p, Side side, std::int64_t n, double phi) {
  const double a = p.abs_c();
  if (a == 0.0) return Mat2C::zero();
  const SideData sd = side_data(p, side, phi);
  const double amp = sd.sign * a / (4.0 * static_cast<double>(n) * p.sin_omega1());
  return rotation_reflection(sd.mu * static_cast<double>(n)) * Complex(amp);
}

CertifiedMat harris_lutz_T(const PotentialParams& p, Side side, std::int64_t n, double phi,
                           double tol) {
  if (n < 1) throw std::domain_error("harris_lutz_T: n must be >= 1");
  if (!(tol > 0.0)) throw std::domain_error("harris_lutz_T: tol must be > 0");
  check_in_neighborhood(p, side, phi);
  if (p.abs_c() == 0.0) return {Mat2C::zero(), 0.0};

  const std::int64_t K = std::max(n, kExplicitHead);
  Mat2C head = Mat2C::zero();
  for (std::int64_t k = n; k < K; ++k) head += harris_lutz_summand(p, side, k, phi);

  double bound = 0.0;
  const Mat2C tail = tail_matrix(p, side, K, phi, tol, bound);
  return {(head + tail) * Complex(-1.0), bound};
}

HarrisLutzWalker::HarrisLutzWalker(const PotentialParams& p, Side side, std::int64_t n0,
                                   double phi, double tol)
    : p_(&p), side_(side), phi_(phi), n_(n0) {
  const auto t = harris_lutz_T(p, side, n0, phi, tol);
  T_ = t.value;
  bound_ = t.bound;
}

ReducedSystemStep reduced_step_given(const PotentialParams& p, Side side, std::int64_t n,
                                     double phi, const Mat2C& T_n, const Mat2C& T_n1) {
  const Mat2C b = reduced_basis(p, side);
  const Mat2C inner = expm(T_n1 * Complex(-1.0)) * transfer_matrix(p, n, phi) * expm(T_n);
  const Mat2C step = b * inner * b.inverse();
  ReducedSystemStep out;
  out.resonant = reduced_resonant(p, side, n, phi);
  out.remainder = step - Mat2C::identity() - out.resonant;
  return out;
}

ReducedSystemStep reduced_step(const PotentialParams& p, Side side, std::int64_t n, double phi,
                               double tol) {
  const auto t_n = harris_lutz_T(p, side, n, phi, tol);
  const Mat2C t_n1 = t_n.value + harris_lutz_summand(p, side, n, phi);
  return reduced_step_given(p, side, n, phi, t_n.value, t_n1);
}

Vec2C p_hat_assemble(const PotentialParams& p, Side side, double phi, std::int64_t n,
                     const Mat2C& T_n, double P_n, double P_n1) {
  const Vec2C v = variation_matrix_inverse(phi, n) * Vec2C{P_n, P_n1};
  return reduced_basis(p, side) * (expm(T_n * Complex(-1.0)) * v);
}

Vec2C p_hat(const PotentialParams& p, Side side, std::int64_t n, double phi, double tol) {
  check_in_neighborhood(p, side, phi);
  const Mat2C T_n =
      (p.abs_c() == 0.0) ? Mat2C::zero() : harris_lutz_T(p, side, n, phi, tol).value;
  PolynomialSequence seq(p, phi_to_lambda(phi));
  while (seq.n() < n) seq.advance();
  return p_hat_assemble(p, side, phi, n, T_n, seq.value(), seq.next_value());
}

std::int64_t n_min_for(double phi, double center) {
  const double dist = std::abs(phi - center);
  if (dist <= 0.0) return std::numeric_limits<std::int64_t>::max();
  const double n = std::ceil(2000.0 / dist);
  return (n > 4e18) ? std::numeric_limits<std::int64_t>::max()
                    : static_cast<std::int64_t>(n);
}

LimitResult p_hat_infinity(const PotentialParams& p, Side side, double phi, std::int64_t N,
                           double tol) {
  check_in_neighborhood(p, side, phi);
  const bool free_mode = (p.abs_c() == 0.0);

  std::int64_t L;
  if (free_mode) {
    if (N < 64) throw std::domain_error("p_hat_infinity: N must be >= 64");
    L = std::clamp<std::int64_t>(N / 10, 4, 64);
  } else {
    const auto nb = critical_neighborhood(p, side);
    const double dist = std::abs(phi - nb.center);
    if (dist < kCenterSnap)
      throw std::domain_error("p_hat_infinity: phi is at the critical center; the limit "
                              "diverges there");
    if (static_cast<double>(N) * dist < 2000.0 * (1.0 - 1e-9))
      throw std::domain_error(
          "p_hat_infinity: N is below N_min(phi) = ceil(2000/|phi-center|)");
    L = std::clamp<std::int64_t>(std::llround(kPi / dist), 4,
                                 std::max<std::int64_t>(4, N / 10));
  }
  const std::int64_t n0 = N - 2 * L + 1;

  PolynomialSequence seq(p, phi_to_lambda(phi));
  while (seq.n() < n0) seq.advance();
  HarrisLutzWalker walker(p, side, n0, phi, std::min(1e-10, tol * 1e-4) + 1e-14);

  Vec2C sum0, sum1;
  for (std::int64_t n = n0;; ++n) {
    const Vec2C ph = p_hat_assemble(p, side, phi, n, walker.T(), seq.value(), seq.next_value());
    if (n <= N - L)
      sum0 += ph;
    else
      sum1 += ph;
    if (n == N) break;
    seq.advance();
    walker.advance();
  }
  const Vec2C avg0 = sum0 / Complex(static_cast<double>(L));
  const Vec2C avg1 = sum1 / Complex(static_cast<double>(L));
  const double err = (avg1 - avg0).norm();
  return {avg1, err, err <= tol * std::max(1.0, avg1.norm()), N};
}

} // namespace wvn
