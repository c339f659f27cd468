#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wvn/runner.hpp"

using namespace wvn;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("scan command: free-operator CSV matches the closed form") {
  TempFile tmp("test_scan_free.csv");
  RunConfig cfg;
  cfg.command = Command::scan;
  cfg.c = 0.0;
  cfg.grid = {-1.9, 1.9, 39};
  cfg.out = tmp.path;
  const auto res = run(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.warnings == 0);

  std::ifstream f(tmp.path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "lambda,phi,rho_prime,error_estimate,flags");
  int rows = 0;
  std::string line;
  while (std::getline(f, line)) {
    double lambda, phi, rho, err;
    char flags[32] = {0};
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%31s", &lambda, &phi, &rho, &err,
                        flags) == 5);
    CHECK(std::abs(rho - oracle::free_density(lambda)) / oracle::free_density(lambda) <
          1e-4);
    CHECK(std::string(flags) == "ok");
    ++rows;
  }
  CHECK(rows == 39);
}

TEST_CASE("scan output is deterministic byte for byte") {
  TempFile a("test_scan_a.csv"), b("test_scan_b.csv");
  RunConfig cfg;
  cfg.command = Command::scan;
  cfg.c = 0.6;
  cfg.omega = 1.1;
  cfg.grid = {-1.2, 1.2, 9};
  cfg.out = a.path;
  run(cfg);
  cfg.out = b.path;
  run(cfg);
  CHECK(slurp(a.path) == slurp(b.path));
}

TEST_CASE("scan JSON mirrors the CSV fields") {
  TempFile tmp("test_scan.json");
  RunConfig cfg;
  cfg.command = Command::scan;
  cfg.c = 0.0;
  cfg.grid = {-1.0, 1.0, 5};
  cfg.out = tmp.path;
  cfg.format = OutputFormat::json;
  run(cfg);
  const std::string text = slurp(tmp.path);
  CHECK(text.find("\"rows\"") != std::string::npos);
  CHECK(text.find("\"lambda\"") != std::string::npos);
  CHECK(text.find("\"rho_prime\"") != std::string::npos);
  CHECK(text.find("\"flags\"") != std::string::npos);
}

TEST_CASE("resonance-violating omega is rejected with the condition in the message") {
  RunConfig cfg;
  cfg.command = Command::scan;
  cfg.c = 1.0;
  cfg.omega = std::numbers::pi / 2.0;
  CHECK_THROWS_WITH_AS(run(cfg), doctest::Contains("pi/2"), std::domain_error);
}

TEST_CASE("pseudogap command end to end (reduced grid)") {
  TempFile tmp("test_pseudogap.json");
  RunConfig cfg;
  cfg.command = Command::pseudogap;
  cfg.c = 1.0;
  cfg.omega = std::numbers::pi / 4.0;
  cfg.eps = {0.2, 4};
  cfg.out = tmp.path;
  cfg.format = OutputFormat::json;
  const auto res = run(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.summary.find("predicted = 0.707106781187") != std::string::npos);
  const std::string text = slurp(tmp.path);
  CHECK(text.find("\"fits\"") != std::string::npos);
  CHECK(text.find("\"fitted_exponent\"") != std::string::npos);
}

TEST_CASE("gev command summary carries exponents and correlation") {
  RunConfig cfg;
  cfg.command = Command::gev;
  cfg.c = 1.0;
  cfg.omega = std::numbers::pi / 4.0;
  cfg.N = 200000;
  const auto res = run(cfg);
  CHECK(res.summary.find("dominant exponent") != std::string::npos);
  CHECK(res.summary.find("correlation") != std::string::npos);
}

TEST_CASE("classify command reports regular points for generic delta") {
  RunConfig cfg;
  cfg.command = Command::classify;
  cfg.c = 1.0;
  cfg.omega = std::numbers::pi / 4.0;
  cfg.N = 60000;
  const auto res = run(cfg);
  CHECK(res.summary.find("regular") != std::string::npos);
}

TEST_CASE("model command reports the gamma oracle and kernel annihilation") {
  TempFile tmp("test_model.json");
  RunConfig cfg;
  cfg.command = Command::model;
  cfg.c = 1.0;
  cfg.omega = std::numbers::pi / 4.0;
  cfg.eps = {0.125, 6};
  cfg.N = 50000;
  cfg.out = tmp.path;
  cfg.format = OutputFormat::json;
  const auto res = run(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.summary.find("gamma-oracle errors") != std::string::npos);
  CHECK(res.summary.find("kernel annihilation") != std::string::npos);
  const std::string text = slurp(tmp.path);
  CHECK(text.find("\"rank_one_defect\"") != std::string::npos);
}

TEST_CASE("config validation failures surface as domain errors") {
  RunConfig cfg;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(run(cfg), std::domain_error);
  cfg.tol = 1e-4;
  cfg.command = Command::scan;
  cfg.grid = {1.0, -1.0, 11};
  CHECK_THROWS_AS(run(cfg), std::domain_error);
}
