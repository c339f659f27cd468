#pragma once

#include <cstdint>

#include "wvn/qseq.hpp"

namespace wvn {

/// Parameters of the diagonal b_n = c sin(2 omega n + delta)/n + q_n.
///
/// The constructor normalizes once: omega1 = omega - pi*floor(omega/pi) in
/// (0, pi) and delta1 = delta + (pi/2)(sign c - 1), so that
/// c sin(2 omega n + delta) = |c| sin(2 omega1 n + delta1) for all integer n.
/// Downstream modules use only (|c|, omega1, delta1). Resonance analysis
/// (c != 0) requires omega not to be a multiple of pi/2.
class PotentialParams {
  public:
    PotentialParams(double c, double omega, double delta, QSequence q = QSequence::zero());

    double c() const { return c_; }
    double omega() const { return omega_; }
    double delta() const { return delta_; }
    const QSequence& q() const { return q_; }

    double abs_c() const { return abs_c_; }
    double omega1() const { return omega1_; }
    double delta1() const { return delta1_; }
    double sin_omega1() const { return sin_omega1_; }

    bool resonant() const { return c_ != 0.0; }

    /// b_n, evaluated in the rewritten form |c| sin(2 omega1 n + delta1)/n + q_n.
    double b(std::int64_t n) const;

  private:
    double c_, omega_, delta_;
    QSequence q_;
    double abs_c_, omega1_, delta1_, sin_omega1_;
};

} // namespace wvn
