// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
// Heavier asymptotic checks live here rather than in the unit tests.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wvn/harris_lutz.hpp"
#include "wvn/model_system.hpp"
#include "wvn/oscillatory.hpp"
#include "wvn/recurrence.hpp"
#include "wvn/spectral.hpp"
#include "wvn/spectral_point.hpp"

using namespace wvn;
namespace nums = std::numbers;

namespace {

int g_failures = 0;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

void report(int idx, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] %d. %s: %s (%.1f s)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

struct ParamSet {
  double c, omega;
};

const std::vector<ParamSet> kSets = {{1.0, nums::pi / 4.0},
                                     {2.0, nums::pi / 3.0},
                                     {0.5, nums::pi / 5.0}};

// ---------------------------------------------------------------------------
// 1. Free-operator closed form: 39 points, relative error < 1e-3, < 10 s.
void criterion1() {
  const double t0 = now_seconds();
  const PotentialParams free(0.0, nums::pi / 4.0, 0.0);
  double worst = 0.0;
  for (int i = 0; i < 39; ++i) {
    const double lambda = -1.9 + 0.1 * i;
    const double want = std::sqrt(4.0 - lambda * lambda) / (2.0 * nums::pi);
    const auto got = spectral_density(free, lambda);
    worst = std::max(worst, std::abs(got.rho_prime - want) / want);
  }
  const double dt = now_seconds() - t0;
  const bool pass = worst < 1e-3 && dt < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "max rel err %.3g (< 1e-3), runtime %.2f s (< 10 s)",
                worst, dt);
  report(1, "free-operator closed form", pass, buf, dt);
}

// ---------------------------------------------------------------------------
// 2. Pseudogap exponents within 10% at both critical points, both sides; < 5 min.
// 4. Exponent doubling against the GEV fits (15% combined), filled later.
struct PseudogapOutcome {
  double best_fit = 0.0; // exponent from the lowest-residual fit of the set
  double best_rms = 1e300;
};

PseudogapOutcome g_pg[3];

void criterion2() {
  const double t0 = now_seconds();
  bool pass = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < kSets.size(); ++i) {
    const PotentialParams p(kSets[i].c, kSets[i].omega, 0.0);
    for (const Side side : {Side::plus, Side::minus}) {
      const auto crit = critical_point(p, side);
      for (const FitSide fs : {FitSide::left, FitSide::right}) {
        const auto fit = pseudogap_fit(p, crit, fs);
        const double rel =
            std::abs(fit.exponent - crit.predicted_exponent) / crit.predicted_exponent;
        worst = std::max(worst, rel);
        const bool ok = rel < 0.10;
        if (!ok) pass = false;
        std::printf("    c=%g omega=%.6g nu=%+.6f %s: fitted %.5f predicted %.5f "
                    "(rel %+.1f%%, rms %.3g) %s\n",
                    kSets[i].c, kSets[i].omega, crit.nu,
                    fs == FitSide::left ? "left " : "right", fit.exponent,
                    crit.predicted_exponent,
                    100.0 * (fit.exponent - crit.predicted_exponent) /
                        crit.predicted_exponent,
                    fit.residual_rms, ok ? "ok" : "OUT");
        if (fit.residual_rms < g_pg[i].best_rms) {
          g_pg[i].best_rms = fit.residual_rms;
          g_pg[i].best_fit = fit.exponent;
        }
      }
    }
  }
  const double dt = now_seconds() - t0;
  if (dt >= 300.0) pass = false;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "worst |fit-pred|/pred %.3g (< 0.10) over 3 sets x 2 points x 2 sides, "
                "runtime %.1f s (< 300 s)",
                worst, dt);
  report(2, "pseudogap exponent", pass, buf, dt);

  if (!pass) {
    // Diagnostic only (not part of the criterion): on a deeper grid the
    // power law's correction term (~ eps^{2 beta}, large coefficient at the
    // plus point) has decayed and the fits land on the predicted exponent.
    const PotentialParams p(1.0, nums::pi / 4.0, 0.0);
    const auto crit = critical_point(p, Side::plus);
    std::vector<double> deep;
    for (int k = 5; k <= 12; ++k) deep.push_back(0.2 * std::pow(2.0, -k));
    for (const FitSide fs : {FitSide::left, FitSide::right}) {
      const auto fit = pseudogap_fit(p, crit, fs, deep);
      std::printf("    [info] c=1 omega=pi/4 nu=+%.6f %s on eps-grid k=5..12: fitted "
                  "%.5f (rel %+.2f%%)\n",
                  crit.nu, fs == FitSide::left ? "left " : "right", fit.exponent,
                  100.0 * (fit.exponent - crit.predicted_exponent) /
                      crit.predicted_exponent);
    }
  }
}

// ---------------------------------------------------------------------------
// 3. GEV exponents at lambda = 2 cos(omega) within 5% at N = 1e6; correlation > 0.9.
double g_gev_fit[3];

void criterion3() {
  const double t0 = now_seconds();
  bool pass = true;
  double worst_rel = 0.0, worst_corr = 1.0;
  for (std::size_t i = 0; i < kSets.size(); ++i) {
    const PotentialParams p(kSets[i].c, kSets[i].omega, 0.0);
    const auto crit = critical_point(p, Side::plus); // lambda = 2 cos(omega)
    const auto fit = gev_exponent_fit(p, crit, 1'000'000);
    g_gev_fit[i] = fit.exponent_plus;
    const double rel =
        std::abs(fit.exponent_plus - crit.predicted_gev_exponent) / crit.predicted_gev_exponent;
    worst_rel = std::max(worst_rel, rel);
    worst_corr = std::min(worst_corr, fit.correlation);
    if (rel >= 0.05 || fit.correlation <= 0.9) pass = false;
  }
  const double dt = now_seconds() - t0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "worst exponent rel err %.3g (< 0.05), min corr %.3f (> 0.9)",
                worst_rel, worst_corr);
  report(3, "generalized-eigenvector exponents", pass, buf, dt);
}

void criterion4() {
  // The pseudogap exponent per set is taken from its lowest-residual fit,
  // the most trustworthy of the four one-sided estimates.
  const double t0 = now_seconds();
  bool pass = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < kSets.size(); ++i) {
    const double doubled = 2.0 * g_gev_fit[i];
    const double rel = std::abs(g_pg[i].best_fit - doubled) / doubled;
    worst = std::max(worst, rel);
    if (rel >= 0.15) pass = false;
  }
  const double dt = now_seconds() - t0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst |pseudogap(best fit) - 2 gev| / (2 gev) = %.3g (< 0.15)", worst);
  report(4, "exponent-doubling identity", pass, buf, dt);
}

// ---------------------------------------------------------------------------
// 5. Model-system Gamma oracle. The entrywise match at N = 1e5 uses the exact
// finite-N Gamma-ratio closed form. The rank-one defect needs a longer
// trajectory for beta = 0.25 (defect ~ 0.74 N^{-1/2} by the same closed form),
// so it is evaluated at N = 1e8.
void criterion5() {
  const double t0 = now_seconds();
  bool pass = true;
  double worst_entry = 0.0, worst_defect = 0.0;
  for (const double beta : {0.25, 0.5, 0.75}) {
    const ModelParams m(beta, 0.0);
    const std::int64_t N = 100'000;
    const auto r = product_phi0(m, N);
    const double nd = static_cast<double>(N);
    const double scale = std::pow(nd, -beta);
    const double want11 =
        std::exp(std::lgamma(nd + 1.0 + beta) - std::lgamma(nd + 1.0) -
                 std::lgamma(1.0 + beta)) *
        scale;
    const double want22 =
        std::exp(std::lgamma(nd + 1.0 - beta) - std::lgamma(nd + 1.0) -
                 std::lgamma(1.0 - beta)) *
        scale;
    worst_entry = std::max(worst_entry, std::abs(r.matrix.a11 - Complex(want11)));
    worst_entry = std::max(worst_entry, std::abs(r.matrix.a22 - Complex(want22)));
    worst_entry = std::max(worst_entry, std::abs(r.matrix.a12));
    worst_entry = std::max(worst_entry, std::abs(r.matrix.a21));

    const auto rd = product_phi0(m, 100'000'000);
    worst_defect = std::max(worst_defect, rank_one_defect(rd.matrix));
  }
  pass = worst_entry < 1e-6 && worst_defect < 1e-4;
  const double dt = now_seconds() - t0;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "worst gamma-oracle entry error %.3g (< 1e-6) at N=1e5, worst rank-one "
                "defect %.3g (< 1e-4) at N=1e8",
                worst_entry, worst_defect);
  report(5, "model-system gamma oracle", pass, buf, dt);
}

// ---------------------------------------------------------------------------
// 6. Kernel equality of Phi0 and Phi+- at relative 1e-2, with and without a
// synthetic summable remainder.
void criterion6() {
  const double t0 = now_seconds();
  std::vector<double> eps;
  for (int k = 3; k <= 10; ++k) eps.push_back(std::pow(2.0, -k));
  bool pass = true;
  double worst = 0.0;
  const ModelRemainder synthetic =
      ModelRemainder::scaled(QSequence::geometric(0.5), Mat2C{0.3, 0.1, -0.2, 0.05});
  for (const bool with_rem : {false, true}) {
    const ModelParams m(0.5, 0.0, with_rem ? synthetic : ModelRemainder::none());
    const auto phi0 = product_phi0(m, 1'000'000);
    const Vec2C kernel = right_singular_vector_min(phi0.matrix);
    for (const Side side : {Side::plus, Side::minus}) {
      const auto pm = product_phi_pm(m, side, eps);
      const double rel = (pm.matrix * kernel).norm() / pm.matrix.frobenius_norm();
      worst = std::max(worst, rel);
      if (rel >= 1e-2) pass = false;
    }
  }
  const double dt = now_seconds() - t0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "worst |Phi+- ker| / |Phi+-| = %.3g (< 1e-2)", worst);
  report(6, "kernel equality of the scaled limits", pass, buf, dt);
}

// ---------------------------------------------------------------------------
// 7. Cross-route density consistency on 50 regular points inside U+.
void criterion7() {
  const double t0 = now_seconds();
  const PotentialParams p(0.4, nums::pi / 4.0, 0.0);
  const auto nb = critical_neighborhood(p, Side::plus);
  bool pass = true;
  double worst = 0.0;
  int checked = 0;
  for (int i = 0; checked < 50; ++i) {
    // Alternate sides of the center, |eps| = 2|phi - center| >= 0.05.
    const double frac = 0.025 + (0.95 * nb.halfwidth - 0.025) * (i % 25) / 24.0;
    const double offset = (i % 2 == 0) ? frac : -frac;
    const double phi = nb.center + offset;
    if (!nb.contains(phi) || std::abs(offset) < 0.025) continue;
    ++checked;
    const double lambda = phi_to_lambda(phi);
    const auto a = spectral_density(p, lambda);
    const auto b = amplitude_oracle_density(p, lambda);
    const double rel = std::abs(a.rho_prime - b.rho_prime) / a.rho_prime;
    worst = std::max(worst, rel);
    if (rel >= 0.05) pass = false;
  }
  const double dt = now_seconds() - t0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "worst route disagreement %.3g (< 0.05) over 50 points",
                worst);
  report(7, "cross-route density consistency", pass, buf, dt);
}

// ---------------------------------------------------------------------------
// 8. Structural invariants bundle.
void criterion8() {
  const double t0 = now_seconds();
  std::string detail;
  bool pass = true;

  // det M_n = 1 to 1e-14 on random samples.
  {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> uphi(0.05, nums::pi - 0.05);
    std::uniform_int_distribution<std::int64_t> un(1, 1'000'000);
    const PotentialParams p(1.3, 1.1, 0.4, QSequence::geometric(0.7, 0.3));
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
      const Mat2C m = transfer_matrix(p, un(rng), uphi(rng));
      worst = std::max(worst, std::abs(m.det() - Complex(1.0)));
    }
    if (worst >= 1e-14) pass = false;
    detail += "det err " + std::to_string(worst);
  }

  // Wronskian constancy to 1e-10.
  {
    const PotentialParams p(1.0, nums::pi / 4.0, 0.2, QSequence::power(2.0, 0.5));
    const double lambda = 0.6;
    double ua = 1.0, ua1 = 0.0, ub = 0.0, ub1 = 1.0;
    const double w0 = ua1 * ub - ua * ub1;
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 100'000; ++n) {
      const double bn1 = p.b(n + 1);
      const double na = (lambda - bn1) * ua1 - ua;
      const double nb = (lambda - bn1) * ub1 - ub;
      ua = ua1;
      ua1 = na;
      ub = ub1;
      ub1 = nb;
      worst = std::max(worst, std::abs((ua1 * ub - ua * ub1) - w0));
    }
    if (worst >= 1e-10) pass = false;
    char b[48];
    std::snprintf(b, sizeof(b), ", wronskian drift %.2g", worst);
    detail += b;
  }

  // tail_sum_bound validity on 100 random samples (brute partial sums).
  {
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> uxi(-7.0, 7.0);
    std::uniform_int_distribution<std::int64_t> un(1, 3000);
    int bad = 0, tested = 0;
    while (tested < 100) {
      const double xi = uxi(rng);
      if (std::abs(std::remainder(xi, 2.0 * nums::pi)) < 1e-3) continue;
      const std::int64_t n = un(rng);
      ++tested;
      Complex s(0.0, 0.0);
      const std::int64_t terms = 200'000;
      for (std::int64_t k = n; k < n + terms; ++k)
        s += std::polar(1.0, xi * static_cast<double>(k)) / static_cast<double>(k);
      const double slack = tail_sum_bound(xi, n + terms);
      if (std::abs(s) > tail_sum_bound(xi, n) + slack + 1e-12) ++bad;
    }
    if (bad > 0) pass = false;
    detail += ", tail-bound violations " + std::to_string(bad) + "/100";
  }

  // Harris-Lutz decay ratio in (0.4, 0.6) at the resonant center.
  {
    const PotentialParams p(1.0, nums::pi / 4.0, 0.0);
    const double phi = p.omega1();
    bool ok = true;
    for (const std::int64_t n : {100, 1000, 10000}) {
      const double tn = harris_lutz_T(p, Side::plus, n, phi, 1e-12).value.frobenius_norm();
      const double t2n =
          harris_lutz_T(p, Side::plus, 2 * n, phi, 1e-12).value.frobenius_norm();
      const double ratio = t2n / tn;
      if (!(ratio > 0.4 && ratio < 0.6)) ok = false;
    }
    if (!ok) pass = false;
    detail += ok ? ", T-decay ratios in (0.4,0.6)" : ", T-decay ratio OUT of (0.4,0.6)";
  }

  // l^1 remainder: partial sums over n <= 1e5 are numerically Cauchy (per-term
  // increments below 1e-6 across the last decade) and stay bounded.
  {
    const PotentialParams p(1.0, nums::pi / 4.0, 0.0);
    const double phi = p.omega1();
    HarrisLutzWalker w(p, Side::plus, 1, phi, 1e-11);
    double total = 0.0, tail_max = 0.0;
    for (std::int64_t n = 1; n <= 100'000; ++n) {
      const Mat2C t_n = w.T();
      w.advance();
      const auto step = reduced_step_given(p, Side::plus, n, phi, t_n, w.T());
      const double r = step.remainder.frobenius_norm();
      total += r;
      if (n > 10'000) tail_max = std::max(tail_max, r);
    }
    if (!(tail_max < 1e-6 && total < 20.0)) pass = false;
    char b[80];
    std::snprintf(b, sizeof(b), ", l1 tail increment %.2g (sum %.3g)", tail_max, total);
    detail += b;
  }

  const double dt = now_seconds() - t0;
  report(8, "structural invariants suite", pass, detail, dt);
}

} // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0)
    std::printf("acceptance: all 8 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
