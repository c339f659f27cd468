#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wvn/potential.hpp"

namespace wvn {

enum class Command { scan, pseudogap, gev, model, classify };
enum class OutputFormat { csv, json };

struct GridSpec {
  double min = -1.9;
  double max = 1.9;
  int points = 39;
  bool operator==(const GridSpec&) const = default;
};

/// eps_k = base * 2^{-k}, k = 0 .. count-1.
struct EpsGridSpec {
  double base = 0.2;
  int count = 8;
  bool operator==(const EpsGridSpec&) const = default;
};

struct RunConfig {
  Command command = Command::scan;
  double c = 1.0;
  double omega = 0.7853981633974483; // pi/4
  double delta = 0.0;
  std::string q = "zero";
  GridSpec grid;
  EpsGridSpec eps;
  std::int64_t N = 0;   // 0 = per-point automatic choice
  double tol = 1e-4;
  std::string out;      // empty = no file output
  OutputFormat format = OutputFormat::csv;

  bool operator==(const RunConfig&) const = default;
};

std::string to_string(Command c);
std::string to_string(OutputFormat f);
Command command_from_string(const std::string& s);
OutputFormat format_from_string(const std::string& s);

std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);

/// Validates and instantiates the potential described by the config.
PotentialParams make_potential(const RunConfig& cfg);

std::vector<double> make_eps_grid(const EpsGridSpec& spec);

} // namespace wvn
