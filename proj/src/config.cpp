#include "wvn/config.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace wvn {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::scan: return "scan";
    case Command::pseudogap: return "pseudogap";
    case Command::gev: return "gev";
    case Command::model: return "model";
    case Command::classify: return "classify";
  }
  return "scan";
}

std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

Command command_from_string(const std::string& s) {
  if (s == "scan") return Command::scan;
  if (s == "pseudogap") return Command::pseudogap;
  if (s == "gev") return Command::gev;
  if (s == "model") return Command::model;
  if (s == "classify") return Command::classify;
  throw std::domain_error("unknown command '" + s +
                          "' (expected scan|pseudogap|gev|model|classify)");
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::domain_error("unknown output format '" + s + "' (expected csv|json)");
}

std::string config_to_json(const RunConfig& cfg) {
  json j;
  j["command"] = to_string(cfg.command);
  j["potential"] = {{"c", cfg.c}, {"omega", cfg.omega}, {"delta", cfg.delta}, {"q", cfg.q}};
  j["grid"] = {{"min", cfg.grid.min}, {"max", cfg.grid.max}, {"points", cfg.grid.points}};
  j["eps_grid"] = {{"base", cfg.eps.base}, {"count", cfg.eps.count}};
  j["N"] = cfg.N;
  j["tol"] = cfg.tol;
  j["out"] = cfg.out;
  j["format"] = to_string(cfg.format);
  return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::domain_error(std::string("config: invalid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    if (j.contains("command")) cfg.command = command_from_string(j.at("command"));
    if (j.contains("potential")) {
      const auto& p = j.at("potential");
      if (p.contains("c")) cfg.c = p.at("c").get<double>();
      if (p.contains("omega")) cfg.omega = p.at("omega").get<double>();
      if (p.contains("delta")) cfg.delta = p.at("delta").get<double>();
      if (p.contains("q")) cfg.q = p.at("q").get<std::string>();
    }
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      if (g.contains("min")) cfg.grid.min = g.at("min").get<double>();
      if (g.contains("max")) cfg.grid.max = g.at("max").get<double>();
      if (g.contains("points")) cfg.grid.points = g.at("points").get<int>();
    }
    if (j.contains("eps_grid")) {
      const auto& e = j.at("eps_grid");
      if (e.contains("base")) cfg.eps.base = e.at("base").get<double>();
      if (e.contains("count")) cfg.eps.count = e.at("count").get<int>();
    }
    if (j.contains("N")) cfg.N = j.at("N").get<std::int64_t>();
    if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("format")) cfg.format = format_from_string(j.at("format"));
  } catch (const json::exception& e) {
    throw std::domain_error(std::string("config: bad field type: ") + e.what());
  }
  return cfg;
}

PotentialParams make_potential(const RunConfig& cfg) {
  return PotentialParams(cfg.c, cfg.omega, cfg.delta, QSequence::parse(cfg.q));
}

std::vector<double> make_eps_grid(const EpsGridSpec& spec) {
  if (!(spec.base > 0.0) || spec.count < 1)
    throw std::domain_error("eps grid: base must be > 0 and count >= 1");
  std::vector<double> g;
  g.reserve(spec.count);
  for (int k = 0; k < spec.count; ++k) g.push_back(spec.base * std::pow(2.0, -k));
  return g;
}

} // namespace wvn
