#include "wvn/potential.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wvn {

namespace {

constexpr double kPi = std::numbers::pi;

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::domain_error(std::string("QSequence: bad ") + what + " value '" + s + "'");
  }
}

} // namespace

QSequence QSequence::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string tag = spec.substr(0, colon);
  const std::string rest = (colon == std::string::npos) ? "" : spec.substr(colon + 1);

  if (tag == "zero") {
    if (!rest.empty()) throw std::domain_error("QSequence: 'zero' takes no arguments");
    return QSequence::zero();
  }
  if (tag == "geometric" || tag == "power") {
    const auto colon2 = rest.find(':');
    const std::string first = rest.substr(0, colon2);
    const double a = parse_double(first, tag.c_str());
    double scale = 1.0;
    if (colon2 != std::string::npos) scale = parse_double(rest.substr(colon2 + 1), "scale");
    return (tag == "geometric") ? QSequence::geometric(a, scale) : QSequence::power(a, scale);
  }
  if (tag == "list") {
    std::vector<double> vals;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(parse_double(item, "list"));
    if (vals.empty()) throw std::domain_error("QSequence: empty list");
    return QSequence::list(std::move(vals));
  }
  throw std::domain_error("QSequence: unknown family '" + tag +
                          "' (expected zero|geometric|power|list)");
}

std::string QSequence::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::zero:
      return "zero";
    case Kind::geometric:
      os << "geometric:" << a_ << ":" << b_;
      return os.str();
    case Kind::power:
      os << "power:" << a_ << ":" << b_;
      return os.str();
    case Kind::list: {
      os << "list:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ",";
        os << values_[i];
      }
      return os.str();
    }
  }
  return "zero";
}

PotentialParams::PotentialParams(double c, double omega, double delta, QSequence q)
    : c_(c), omega_(omega), delta_(delta), q_(std::move(q)) {
  if (!std::isfinite(c) || !std::isfinite(omega) || !std::isfinite(delta))
    throw std::domain_error("PotentialParams: parameters must be finite");

  if (c_ != 0.0) {
    // Resonance analysis requires omega not in (pi/2)Z.
    const double r = omega_ / (kPi / 2.0);
    if (std::abs(r - std::round(r)) < 1e-12)
      throw std::domain_error(
          "PotentialParams: omega must not be a multiple of pi/2 (condition omega not in "
          "(pi/2)Z fails)");
  }

  abs_c_ = std::abs(c_);
  omega1_ = omega_ - kPi * std::floor(omega_ / kPi);
  const double sign_c = (c_ > 0.0) ? 1.0 : (c_ < 0.0 ? -1.0 : 0.0);
  delta1_ = delta_ + (kPi / 2.0) * (sign_c - 1.0);
  sin_omega1_ = std::sin(omega1_);
}

double PotentialParams::b(std::int64_t n) const {
  const double osc =
      (abs_c_ == 0.0)
          ? 0.0
          : abs_c_ * std::sin(2.0 * omega1_ * static_cast<double>(n) + delta1_) /
                static_cast<double>(n);
  return osc + q_(n);
}

} // namespace wvn
