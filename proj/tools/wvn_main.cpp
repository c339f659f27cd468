#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wvn/config.hpp"
#include "wvn/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::domain_error("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// "base:count" for the geometric eps grid eps_k = base * 2^{-k}.
wvn::EpsGridSpec parse_eps_grid(const std::string& s) {
  const auto colon = s.find(':');
  wvn::EpsGridSpec spec;
  try {
    spec.base = std::stod(s.substr(0, colon));
    if (colon != std::string::npos) spec.count = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::domain_error("--eps-grid expects base[:count], e.g. 0.2:8");
  }
  return spec;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral densities of discrete Schrodinger operators with "
               "Wigner-von Neumann potential"};

  std::string command, config_path, q = "zero", out, format = "csv", eps_grid;
  double c = 1.0, omega = 0.7853981633974483, delta = 0.0;
  double lambda_min = -1.9, lambda_max = 1.9, tol = 1e-4;
  int points = 39;
  std::int64_t N = 0;

  auto* cmd_opt = app.add_option("--command", command,
                                 "one of scan|pseudogap|gev|model|classify");
  auto* cfg_opt = app.add_option("--config", config_path, "JSON config file (flags override)");
  auto* c_opt = app.add_option("--c", c, "Wigner-von Neumann amplitude c");
  auto* omega_opt = app.add_option("--omega", omega, "frequency omega (radians)");
  auto* delta_opt = app.add_option("--delta", delta, "phase delta (radians)");
  auto* q_opt = app.add_option("--q", q, "summable tail: zero|geometric:r[:s]|power:p[:s]|list:v,...");
  auto* lmin_opt = app.add_option("--lambda-min", lambda_min, "scan grid lower bound");
  auto* lmax_opt = app.add_option("--lambda-max", lambda_max, "scan grid upper bound");
  auto* pts_opt = app.add_option("--points", points, "scan grid size");
  auto* n_opt = app.add_option("--N", N, "trajectory length override (0 = automatic)");
  auto* tol_opt = app.add_option("--tol", tol, "convergence tolerance");
  auto* eps_opt = app.add_option("--eps-grid", eps_grid, "pseudogap/model eps grid base[:count]");
  auto* out_opt = app.add_option("--out", out, "output file path");
  auto* fmt_opt = app.add_option("--format", format, "csv|json");

  CLI11_PARSE(app, argc, argv);

  try {
    wvn::RunConfig cfg;
    if (cfg_opt->count()) cfg = wvn::config_from_json(read_file(config_path));
    if (cmd_opt->count()) cfg.command = wvn::command_from_string(command);
    if (c_opt->count()) cfg.c = c;
    if (omega_opt->count()) cfg.omega = omega;
    if (delta_opt->count()) cfg.delta = delta;
    if (q_opt->count()) cfg.q = q;
    if (lmin_opt->count()) cfg.grid.min = lambda_min;
    if (lmax_opt->count()) cfg.grid.max = lambda_max;
    if (pts_opt->count()) cfg.grid.points = points;
    if (n_opt->count()) cfg.N = N;
    if (tol_opt->count()) cfg.tol = tol;
    if (eps_opt->count()) cfg.eps = parse_eps_grid(eps_grid);
    if (out_opt->count()) cfg.out = out;
    if (fmt_opt->count()) cfg.format = wvn::format_from_string(format);
    if (!cmd_opt->count() && !cfg_opt->count())
      throw std::domain_error("--command (or --config) is required");

    const wvn::RunResult res = wvn::run(cfg);
    std::cout << res.summary;
    if (res.warnings > 0)
      std::cout << "completed with " << res.warnings << " convergence warning(s)\n";
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
