#include "wvn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "wvn/errors.hpp"
#include "wvn/parallel.hpp"
#include "wvn/recurrence.hpp"
#include "wvn/spectral_point.hpp"

namespace wvn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kDefaultMinN = 20'000;
constexpr std::int64_t kMaxAutoN = 50'000'000;

std::vector<std::int64_t> log_spaced_marks(std::int64_t lo, std::int64_t hi, int count) {
  std::vector<std::int64_t> marks;
  marks.reserve(count);
  const double llo = std::log(static_cast<double>(lo));
  const double lhi = std::log(static_cast<double>(hi));
  for (int j = 0; j < count; ++j) {
    const double t = (count == 1) ? 1.0 : static_cast<double>(j) / (count - 1);
    const auto n = static_cast<std::int64_t>(std::llround(std::exp(llo + t * (lhi - llo))));
    if (marks.empty() || n > marks.back()) marks.push_back(std::min(n, hi));
  }
  if (marks.back() != hi) marks.push_back(hi);
  return marks;
}

} // namespace

CriticalPoint critical_point(const PotentialParams& p, Side side) {
  if (!p.resonant())
    throw std::domain_error("critical_point: the free operator (c = 0) has no resonance points");
  const double w1 = p.omega1();
  const double side_phi = (side == Side::plus) ? w1 : kPi - w1;
  CriticalPoint c;
  c.side = side;
  c.side_phi = side_phi;
  c.nu = 2.0 * std::cos(side_phi);
  c.predicted_gev_exponent = p.abs_c() / (4.0 * p.sin_omega1());
  c.predicted_exponent = 2.0 * c.predicted_gev_exponent; // sin(omega1) = |sin(omega)|
  return c;
}

DensityValue spectral_density(const PotentialParams& p, double lambda, std::int64_t N,
                              double tol) {
  const SpectralPoint pt = lambda_to_point(lambda);

  if (p.resonant()) {
    const double d_plus = std::abs(pt.phi - p.omega1());
    const double d_minus = std::abs(pt.phi - (kPi - p.omega1()));
    if (std::min(d_plus, d_minus) < 1e-9)
      throw std::domain_error(
          "spectral_density: lambda is a critical point +-2 cos(omega); use the "
          "critical-point operations (gev/pseudogap/classify)");
  }

  Side side = Side::plus;
  bool use_phat = false;
  if (!p.resonant()) {
    use_phat = true;
  } else {
    for (const Side s : {Side::plus, Side::minus}) {
      if (critical_neighborhood(p, s).contains(pt.phi)) {
        use_phat = true;
        side = s;
        break;
      }
    }
  }

  if (use_phat) {
    std::int64_t n_use = N;
    if (n_use == 0) {
      std::int64_t n_min = 64;
      if (p.resonant())
        n_min = n_min_for(pt.phi, critical_neighborhood(p, side).center);
      if (n_min > kMaxAutoN)
        throw std::domain_error(
            "spectral_density: lambda is too close to a critical point for direct "
            "evaluation");
      n_use = std::max(kDefaultMinN, n_min);
    }
    const LimitResult lim = p_hat_infinity(p, side, pt.phi, n_use, tol);
    const double nrm = lim.value.norm();
    const double rho = 1.0 / (4.0 * kPi * std::sin(pt.phi) * nrm * nrm);
    const double err = rho * 2.0 * lim.error_estimate / std::max(nrm, 1e-300);
    return {rho, err, lim.converged,
            side == Side::plus ? DensityRoute::phat_plus : DensityRoute::phat_minus};
  }

  const AmplitudeDensity amp = amplitude_oracle_density(p, lambda, N);
  return {amp.rho_prime, amp.error_estimate, amp.converged, DensityRoute::amplitude};
}

AmplitudeDensity amplitude_oracle_density(const PotentialParams& p, double lambda,
                                          std::int64_t N) {
  const SpectralPoint pt = lambda_to_point(lambda);

  if (N == 0) {
    std::int64_t n_min = 0;
    if (p.resonant()) {
      const double dist = std::min(std::abs(pt.phi - p.omega1()),
                                   std::abs(pt.phi - (kPi - p.omega1())));
      const double req = 2000.0 / std::max(dist, 4e-5);
      n_min = static_cast<std::int64_t>(std::ceil(req));
    }
    N = std::max(kDefaultMinN, n_min);
    if (N > kMaxAutoN)
      throw std::domain_error(
          "amplitude_oracle_density: lambda is too close to a critical point");
  }

  // Trailing window: ~20 beat periods of |P_n|, at least 512 samples.
  const double beat = kPi / pt.phi;
  const std::int64_t W = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(std::ceil(20.0 * beat)), 512, std::max<std::int64_t>(512, N / 2));
  if (N < 2 * W || N < 1024)
    throw std::domain_error("amplitude_oracle_density: N leaves the trailing window too "
                            "short for amplitude estimation");

  // Harmonic least squares at the known frequency phi, full window plus the
  // two halves for an error estimate.
  struct Sums {
    double cc = 0, cs = 0, ss = 0, pc = 0, ps = 0;
    void add(double cn, double sn, double pn) {
      cc += cn * cn;
      cs += cn * sn;
      ss += sn * sn;
      pc += pn * cn;
      ps += pn * sn;
    }
    double amplitude() const {
      const double det = cc * ss - cs * cs;
      if (std::abs(det) < 1e-12 * std::max(1.0, cc * ss))
        throw std::domain_error("amplitude_oracle_density: degenerate harmonic basis");
      const double c = (ss * pc - cs * ps) / det;
      const double s = (cc * ps - cs * pc) / det;
      return std::hypot(c, s);
    }
  };
  Sums full, half1, half2;

  PolynomialSequence seq(p, lambda);
  const std::int64_t start = N - W + 1;
  const std::int64_t mid = N - W / 2;
  while (seq.n() < start) seq.advance();
  for (;; seq.advance()) {
    const std::int64_t n = seq.n();
    const double arg = pt.phi * static_cast<double>(n);
    const double cn = std::cos(arg);
    const double sn = std::sin(arg);
    const double pn = seq.value();
    full.add(cn, sn, pn);
    (n <= mid ? half1 : half2).add(cn, sn, pn);
    if (n == N) break;
  }

  const double A = full.amplitude();
  const double dA = std::abs(half1.amplitude() - half2.amplitude());
  if (!(A > 0.0))
    throw std::domain_error("amplitude_oracle_density: vanishing oscillation amplitude");

  AmplitudeDensity out;
  out.amplitude = A;
  out.f_abs = A * std::sin(pt.phi);
  out.rho_prime = 1.0 / (kPi * A * A * std::sin(pt.phi));
  out.error_estimate = 2.0 * out.rho_prime * dA / A;
  out.converged = dA <= 0.02 * A;
  return out;
}

GevFit gev_exponent_fit(const PotentialParams& p, const CriticalPoint& crit, std::int64_t N,
                        std::uint64_t seed) {
  if (N < 1000) throw std::domain_error("gev_exponent_fit: N must be >= 1000");
  const double lambda = crit.nu;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double ua_prev = uni(rng), ua_cur = uni(rng);
  double ub_prev = uni(rng), ub_cur = uni(rng);
  if (std::abs(ua_prev) + std::abs(ua_cur) < 0.1) ua_prev = 1.0;
  if (std::abs(ub_prev) + std::abs(ub_cur) < 0.1) ub_cur = 1.0;

  const std::int64_t n_lo = N / 10;
  const auto marks = log_spaced_marks(std::max<std::int64_t>(n_lo, 16), N, 160);
  const auto losc = static_cast<std::int64_t>(std::ceil(2.0 * kPi / p.omega1())) + 1;

  std::vector<double> env_a(marks.size(), 0.0), env_b(marks.size(), 0.0),
      sig1(marks.size(), 0.0);
  std::vector<double> ua_decade, ub_decade;
  ua_decade.reserve(static_cast<std::size_t>(N - n_lo + 1));
  ub_decade.reserve(static_cast<std::size_t>(N - n_lo + 1));

  Mat2C psi = Mat2C::identity(); // maps (u_1, u_2) to (u_n, u_{n+1})
  std::size_t next_mark = 0;

  for (std::int64_t n = 1; n <= N; ++n) {
    if (n >= n_lo) {
      ua_decade.push_back(ua_prev); // u_n
      ub_decade.push_back(ub_prev);
    }
    while (next_mark < marks.size() && marks[next_mark] < n) ++next_mark;
    if (next_mark < marks.size()) {
      const std::int64_t m = marks[next_mark];
      if (n > m - losc && n <= m) {
        env_a[next_mark] = std::max(env_a[next_mark], std::abs(ua_prev));
        env_b[next_mark] = std::max(env_b[next_mark], std::abs(ub_prev));
        if (n == m) {
          sig1[next_mark] = singular_values(psi).first;
          ++next_mark;
        }
      }
    }
    // advance to n+1
    const double bn1 = p.b(n + 1);
    const double ua_new = (lambda - bn1) * ua_cur - ua_prev;
    const double ub_new = (lambda - bn1) * ub_cur - ub_prev;
    ua_prev = ua_cur;
    ua_cur = ua_new;
    ub_prev = ub_cur;
    ub_cur = ub_new;
    psi = scalar_step_matrix(p, n + 1, lambda) * psi;
  }

  std::vector<double> lx, la, lb, ls;
  for (std::size_t j = 0; j < marks.size(); ++j) {
    if (env_a[j] <= 0.0 || env_b[j] <= 0.0 || sig1[j] <= 0.0) continue;
    lx.push_back(std::log(static_cast<double>(marks[j])));
    la.push_back(std::log(env_a[j]));
    lb.push_back(std::log(env_b[j]));
    ls.push_back(std::log(sig1[j]));
  }
  if (lx.size() < 8)
    throw ConvergenceError("gev_exponent_fit: too few usable envelope samples", 0.0);

  const LineFit fa = fit_line(lx, la);
  const LineFit fb = fit_line(lx, lb);
  const LineFit fs = fit_line(lx, ls);

  GevFit out;
  out.exponent_plus = 0.5 * (fa.slope + fb.slope);
  out.exponent_minus = -fs.slope; // sigma2 = 1/sigma1 since det = 1
  out.residual_rms = std::max(fa.residual_rms, fb.residual_rms);

  // Correlation of the normalized solution with the predicted oscillatory factor.
  const double w1 = p.omega1();
  const double d1 = p.delta1();
  std::vector<double> factor, xa, xb;
  factor.reserve(ua_decade.size());
  xa.reserve(ua_decade.size());
  xb.reserve(ua_decade.size());
  for (std::size_t i = 0; i < ua_decade.size(); ++i) {
    const auto n = static_cast<double>(n_lo + static_cast<std::int64_t>(i));
    double f = (crit.side == Side::plus)
                   ? std::cos(w1 * n + d1 / 2.0)
                   : std::sin(w1 * n + d1 / 2.0) *
                         ((static_cast<std::int64_t>(n) % 2 == 0) ? 1.0 : -1.0);
    factor.push_back(f);
    const double scale = std::pow(n, -out.exponent_plus);
    xa.push_back(ua_decade[i] * scale);
    xb.push_back(ub_decade[i] * scale);
  }
  out.correlation = std::max(std::abs(pearson_correlation(xa, factor)),
                             std::abs(pearson_correlation(xb, factor)));
  return out;
}

std::vector<double> default_eps_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 7; ++k) g.push_back(0.2 * std::pow(2.0, -k));
  return g;
}

PowerLawFit pseudogap_fit(const PotentialParams& p, const CriticalPoint& crit, FitSide side,
                          std::vector<double> eps_grid, double tol,
                          std::vector<DensityScanRow>* rows_out) {
  if (eps_grid.empty()) throw std::domain_error("pseudogap_fit: empty eps grid");

  const Classification cls = classify_critical_point(p, crit, 400'000, 1e-3);
  if (cls.cls != PointClass::regular)
    throw std::domain_error("pseudogap_fit: the critical point is not regular "
                            "(eigenvalue or half-bound state at this delta)");

  const CriticalNeighborhood nb = critical_neighborhood(p, crit.side);
  std::vector<double> xs, ys;
  int excluded = 0;
  for (const double eps : eps_grid) {
    if (!(eps > 0.0)) throw std::domain_error("pseudogap_fit: eps values must be positive");
    const double phi_k =
        crit.side_phi + ((side == FitSide::right) ? -eps / 2.0 : eps / 2.0);
    if (!nb.contains(phi_k))
      throw std::domain_error("pseudogap_fit: eps grid leaves the U neighborhood; shrink "
                              "the grid or the largest eps");
    const double lambda_k = phi_to_lambda(phi_k);
    const std::int64_t n_eps = static_cast<std::int64_t>(std::ceil(2000.0 / eps));
    const std::int64_t n_k = std::max(n_min_for(phi_k, crit.side_phi), n_eps);
    const DensityValue dv = spectral_density(p, lambda_k, n_k, tol);
    if (rows_out)
      rows_out->push_back({lambda_k, phi_k, dv.rho_prime, dv.error_estimate,
                           dv.converged ? "ok" : "nonconv"});
    if (!dv.converged) {
      ++excluded;
      continue;
    }
    xs.push_back(std::abs(lambda_k - crit.nu));
    ys.push_back(dv.rho_prime);
  }
  if (xs.size() < 3)
    throw ConvergenceError("pseudogap_fit: fewer than three grid points converged", 0.0);

  PowerLawFit fit = fit_log_log(xs, ys);
  fit.side = side;
  fit.excluded_points = excluded;
  return fit;
}

ScaledLimit critical_scaled_limit(const PotentialParams& p, const CriticalPoint& crit,
                                  std::int64_t N) {
  if (N < 1000) throw std::domain_error("critical_scaled_limit: N must be >= 1000");
  const double phi = crit.side_phi;
  const double beta = crit.predicted_gev_exponent;
  const double lambda = phi_to_lambda(phi);

  const auto marks = log_spaced_marks(8, N, 96);
  PolynomialSequence seq(p, lambda);
  HarrisLutzWalker walker(p, crit.side, 1, phi, 1e-10);

  double max_norm = 0.0;
  std::vector<Vec2C> tail_scaled;
  std::size_t next_mark = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    if (next_mark < marks.size() && n == marks[next_mark]) {
      const Vec2C ph =
          p_hat_assemble(p, crit.side, phi, n, walker.T(), seq.value(), seq.next_value());
      const Vec2C scaled = ph * Complex(std::pow(static_cast<double>(n), -beta));
      max_norm = std::max(max_norm, scaled.norm());
      tail_scaled.push_back(scaled);
      if (tail_scaled.size() > 8) tail_scaled.erase(tail_scaled.begin());
      ++next_mark;
    }
    if (n == N) break;
    seq.advance();
    walker.advance();
  }

  Vec2C avg;
  for (const auto& v : tail_scaled) avg += v;
  avg = avg / Complex(static_cast<double>(tail_scaled.size()));
  const double ratio = (max_norm > 0.0) ? avg.norm() / max_norm : 0.0;
  return {avg, ratio};
}

Classification classify_critical_point(const PotentialParams& p, const CriticalPoint& crit,
                                       std::int64_t N, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("classify_critical_point: tol must be > 0");
  const ScaledLimit sl = critical_scaled_limit(p, crit, N);
  Classification out;
  out.ratio = sl.ratio;
  out.scaled_vector = sl.vector;
  out.borderline = sl.ratio > 0.1 * tol && sl.ratio < 10.0 * tol;
  if (sl.ratio < tol)
    out.cls = (crit.predicted_gev_exponent > 0.5) ? PointClass::eigenvalue
                                                  : PointClass::half_bound_state;
  else
    out.cls = PointClass::regular;
  return out;
}

std::vector<DensityScanRow> density_scan(const PotentialParams& p, double lambda_min,
                                         double lambda_max, int count, std::int64_t N,
                                         double tol) {
  if (count < 2) throw std::domain_error("density_scan: need at least two grid points");
  if (!(lambda_min > -2.0 && lambda_max < 2.0 && lambda_min < lambda_max))
    throw std::domain_error("density_scan: grid bounds must satisfy -2 < min < max < 2");

  std::vector<DensityScanRow> rows(static_cast<std::size_t>(count));
  parallel_for_indexed(static_cast<std::size_t>(count), [&](std::size_t i) {
    const double lambda =
        lambda_min + (lambda_max - lambda_min) * static_cast<double>(i) / (count - 1);
    DensityScanRow row;
    row.lambda = lambda;
    row.phi = std::acos(std::clamp(lambda / 2.0, -1.0, 1.0));
    bool near_critical = false;
    if (p.resonant()) {
      const double d = std::min(std::abs(row.phi - p.omega1()),
                                std::abs(row.phi - (kPi - p.omega1())));
      near_critical = d < 1e-4;
    }
    try {
      const DensityValue dv = spectral_density(p, lambda, N, tol);
      row.rho_prime = dv.rho_prime;
      row.error_estimate = dv.error_estimate;
      row.flags = dv.converged ? "ok" : "nonconv";
    } catch (const std::domain_error&) {
      row.rho_prime = std::numeric_limits<double>::quiet_NaN();
      row.error_estimate = std::numeric_limits<double>::quiet_NaN();
      // An undersized N override also lands here; only label the point
      // critical when it actually sits against a critical energy.
      row.flags = near_critical ? "critical" : "nonconv";
    } catch (const ConvergenceError&) {
      row.rho_prime = std::numeric_limits<double>::quiet_NaN();
      row.error_estimate = std::numeric_limits<double>::quiet_NaN();
      row.flags = "nonconv";
    }
    rows[i] = row;
  });
  return rows;
}

} // namespace wvn
