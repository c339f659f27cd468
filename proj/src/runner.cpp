#include "wvn/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wvn/errors.hpp"
#include "wvn/model_system.hpp"
#include "wvn/spectral.hpp"

namespace wvn {

namespace {

using nlohmann::json;

constexpr std::uint64_t kGevSeed = 0x5eedULL; // fixed: same config, same output

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string rows_to_csv(const std::vector<DensityScanRow>& rows) {
  std::string out = "lambda,phi,rho_prime,error_estimate,flags\n";
  for (const auto& r : rows) {
    out += fmt12(r.lambda);
    out += ',';
    out += fmt12(r.phi);
    out += ',';
    out += fmt12(r.rho_prime);
    out += ',';
    out += fmt12(r.error_estimate);
    out += ',';
    out += r.flags;
    out += '\n';
  }
  return out;
}

json rows_to_json(const std::vector<DensityScanRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"lambda", r.lambda},
                   {"phi", r.phi},
                   {"rho_prime", r.rho_prime},
                   {"error_estimate", r.error_estimate},
                   {"flags", r.flags}});
  return arr;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::domain_error("cannot open output file '" + path + "'");
  f << content;
  if (!f) throw std::domain_error("failed writing output file '" + path + "'");
}

void emit(const RunConfig& cfg, const std::vector<DensityScanRow>& rows, json summary) {
  if (cfg.out.empty()) return;
  if (cfg.format == OutputFormat::csv) {
    write_file(cfg.out, rows_to_csv(rows));
  } else {
    json j;
    j["command"] = to_string(cfg.command);
    j["rows"] = rows_to_json(rows);
    j["summary"] = std::move(summary);
    write_file(cfg.out, j.dump(2) + "\n");
  }
}

int count_warnings(const std::vector<DensityScanRow>& rows) {
  int w = 0;
  for (const auto& r : rows)
    if (r.flags != "ok") ++w;
  return w;
}

RunResult run_scan(const RunConfig& cfg) {
  const PotentialParams p = make_potential(cfg);
  const auto rows =
      density_scan(p, cfg.grid.min, cfg.grid.max, cfg.grid.points, cfg.N, cfg.tol);
  const int warnings = count_warnings(rows);

  std::ostringstream os;
  os << "scan: " << rows.size() << " points in [" << fmt12(cfg.grid.min) << ", "
     << fmt12(cfg.grid.max) << "]\n";
  os << "warnings (non-ok rows): " << warnings << "\n";
  emit(cfg, rows, json{{"warnings", warnings}});
  return {0, warnings, os.str()};
}

RunResult run_pseudogap(const RunConfig& cfg) {
  const PotentialParams p = make_potential(cfg);
  if (!p.resonant())
    throw std::domain_error("pseudogap: requires c != 0 (no critical points otherwise)");
  const auto eps = make_eps_grid(cfg.eps);

  std::vector<DensityScanRow> rows;
  json fits = json::array();
  std::ostringstream os;
  int warnings = 0;
  for (const Side side : {Side::plus, Side::minus}) {
    const CriticalPoint crit = critical_point(p, side);
    for (const FitSide fs : {FitSide::left, FitSide::right}) {
      const auto fit = pseudogap_fit(p, crit, fs, eps, cfg.tol, &rows);
      warnings += fit.excluded_points;
      const char* fs_name = (fs == FitSide::left) ? "left" : "right";
      os << "pseudogap at nu = " << fmt12(crit.nu) << " (" << fs_name
         << "): fitted exponent = " << fmt12(fit.exponent)
         << ", predicted = " << fmt12(crit.predicted_exponent)
         << ", log prefactor = " << fmt12(fit.log_prefactor)
         << ", residual rms = " << fmt12(fit.residual_rms)
         << ", points = " << fit.points_used << "\n";
      fits.push_back({{"nu", crit.nu},
                      {"side", side == Side::plus ? "plus" : "minus"},
                      {"fit_side", fs_name},
                      {"predicted_exponent", crit.predicted_exponent},
                      {"fitted_exponent", fit.exponent},
                      {"log_prefactor", fit.log_prefactor},
                      {"residual_rms", fit.residual_rms},
                      {"points_used", fit.points_used},
                      {"excluded_points", fit.excluded_points},
                      {"dropped_head", fit.dropped_head}});
    }
  }
  emit(cfg, rows, json{{"fits", fits}, {"warnings", warnings}});
  return {0, warnings, os.str()};
}

RunResult run_gev(const RunConfig& cfg) {
  const PotentialParams p = make_potential(cfg);
  if (!p.resonant()) throw std::domain_error("gev: requires c != 0");
  const std::int64_t N = (cfg.N > 0) ? cfg.N : 1'000'000;

  json report = json::array();
  std::ostringstream os;
  for (const Side side : {Side::plus, Side::minus}) {
    const CriticalPoint crit = critical_point(p, side);
    const GevFit fit = gev_exponent_fit(p, crit, N, kGevSeed);
    os << "gev at nu = " << fmt12(crit.nu)
       << ": dominant exponent = " << fmt12(fit.exponent_plus)
       << ", subdominant = " << fmt12(fit.exponent_minus)
       << ", predicted +-" << fmt12(crit.predicted_gev_exponent)
       << ", oscillation correlation = " << fmt12(fit.correlation) << "\n";
    report.push_back({{"nu", crit.nu},
                      {"predicted_gev_exponent", crit.predicted_gev_exponent},
                      {"exponent_plus", fit.exponent_plus},
                      {"exponent_minus", fit.exponent_minus},
                      {"residual_rms", fit.residual_rms},
                      {"correlation", fit.correlation},
                      {"N", N}});
  }
  if (!cfg.out.empty()) {
    json j;
    j["command"] = "gev";
    j["report"] = report;
    write_file(cfg.out, j.dump(2) + "\n");
  }
  return {0, 0, os.str()};
}

RunResult run_classify(const RunConfig& cfg) {
  const PotentialParams p = make_potential(cfg);
  if (!p.resonant()) throw std::domain_error("classify: requires c != 0");
  const std::int64_t N = (cfg.N > 0) ? cfg.N : 200'000;

  json report = json::array();
  std::ostringstream os;
  for (const Side side : {Side::plus, Side::minus}) {
    const CriticalPoint crit = critical_point(p, side);
    const Classification cls = classify_critical_point(p, crit, N, 1e-3);
    const char* name = cls.cls == PointClass::regular         ? "regular"
                       : cls.cls == PointClass::half_bound_state ? "half_bound_state"
                                                                 : "eigenvalue";
    os << "critical point nu = " << fmt12(crit.nu) << ": " << name
       << " (scaled-limit ratio " << fmt12(cls.ratio)
       << (cls.borderline ? ", borderline)" : ")") << "\n";
    report.push_back({{"nu", crit.nu},
                      {"class", name},
                      {"ratio", cls.ratio},
                      {"borderline", cls.borderline},
                      {"N", N}});
  }
  if (!cfg.out.empty()) {
    json j;
    j["command"] = "classify";
    j["report"] = report;
    write_file(cfg.out, j.dump(2) + "\n");
  }
  return {0, 0, os.str()};
}

RunResult run_model(const RunConfig& cfg) {
  const PotentialParams p = make_potential(cfg);
  if (!p.resonant()) throw std::domain_error("model: requires c != 0 (beta is derived "
                                             "from |c| / (4 sin omega1))");
  const double beta = p.abs_c() / (4.0 * p.sin_omega1());
  const ModelParams m0{beta, 0.0};

  std::ostringstream os;
  os << "model system with beta = |c|/(4 sin omega1) = " << fmt12(beta) << "\n";

  // Scaled product at eps = 0 against the Gamma-function closed form.
  const std::int64_t n_gamma = (cfg.N > 0) ? cfg.N : 100'000;
  const auto phi0 = product_phi0(m0, n_gamma);
  const double nd = static_cast<double>(n_gamma);
  const double g_plus = std::exp(std::lgamma(nd + 1.0 + beta) - std::lgamma(nd + 1.0) -
                                 std::lgamma(1.0 + beta) - beta * std::log(nd));
  const double g_minus = std::exp(std::lgamma(nd + 1.0 - beta) - std::lgamma(nd + 1.0) -
                                  std::lgamma(1.0 - beta) - beta * std::log(nd));
  const double err11 = std::abs(phi0.matrix.a11 - Complex(g_plus));
  const double err22 = std::abs(phi0.matrix.a22 - Complex(g_minus));
  os << "phi0 at N = " << n_gamma << ": gamma-oracle errors " << fmt12(err11) << " / "
     << fmt12(err22) << ", rank-one defect " << fmt12(rank_one_defect(phi0.matrix)) << "\n";

  // One-sided limits along the eps grid, plus the kernel annihilation check.
  const auto eps = make_eps_grid(cfg.eps);
  json rows = json::array();
  for (const double e : eps) {
    const ModelParams mp{beta, e};
    const ModelParams mm{beta, -e};
    const auto pp = product_phi(mp, model_n_min(e));
    const auto pm = product_phi(mm, model_n_min(e));
    const double sc = std::pow(e, beta);
    rows.push_back({{"eps", e},
                    {"scaled_norm_plus", sc * pp.matrix.frobenius_norm()},
                    {"scaled_norm_minus", sc * pm.matrix.frobenius_norm()}});
  }
  const auto phip = product_phi_pm(m0, Side::plus, eps);
  const auto phim = product_phi_pm(m0, Side::minus, eps);
  const Vec2C kernel = right_singular_vector_min(phi0.matrix);
  const double ann_p = (phip.matrix * kernel).norm() / phip.matrix.frobenius_norm();
  const double ann_m = (phim.matrix * kernel).norm() / phim.matrix.frobenius_norm();
  os << "phi+- extrapolated norms: " << fmt12(phip.matrix.frobenius_norm()) << " / "
     << fmt12(phim.matrix.frobenius_norm())
     << (phip.warning || phim.warning ? " (warning: spread not contracting)" : "") << "\n";
  os << "kernel annihilation |phi+- ker|/|phi+-|: " << fmt12(ann_p) << " / " << fmt12(ann_m)
     << "\n";

  if (!cfg.out.empty()) {
    json j;
    j["command"] = "model";
    j["beta"] = beta;
    j["gamma_oracle_errors"] = {err11, err22};
    j["rank_one_defect"] = rank_one_defect(phi0.matrix);
    j["kernel_annihilation"] = {ann_p, ann_m};
    j["rows"] = rows;
    write_file(cfg.out, j.dump(2) + "\n");
  }
  const int warnings = (phip.warning ? 1 : 0) + (phim.warning ? 1 : 0);
  return {0, warnings, os.str()};
}

} // namespace

RunResult run(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::domain_error("config: tol must be > 0");
  if (cfg.N < 0) throw std::domain_error("config: N must be >= 0");
  switch (cfg.command) {
    case Command::scan: return run_scan(cfg);
    case Command::pseudogap: return run_pseudogap(cfg);
    case Command::gev: return run_gev(cfg);
    case Command::classify: return run_classify(cfg);
    case Command::model: return run_model(cfg);
  }
  throw std::domain_error("config: unknown command");
}

} // namespace wvn
