#pragma once

#include <stdexcept>
#include <string>

namespace wvn {

/// Thrown when an iterative evaluation cannot certify the requested
/// tolerance within its iteration budget. Carries the best bound reached.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& msg, double best_bound)
        : std::runtime_error(msg), best_bound_(best_bound) {}

    double best_bound() const { return best_bound_; }

  private:
    double best_bound_;
};

} // namespace wvn
