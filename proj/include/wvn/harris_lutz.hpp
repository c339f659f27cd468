#pragma once

#include <cstdint>

#include "wvn/mat2.hpp"
#include "wvn/potential.hpp"

namespace wvn {

enum class Side { plus, minus }; // plus <-> omega1, minus <-> pi - omega1

/// Open interval U_side around the matching resonance angle. The default
/// halfwidth min(omega1, pi - omega1, |pi - 2 omega1|)/4 keeps the excluded
/// twin point and the interval ends of (0, pi) away.
struct CriticalNeighborhood {
  Side side;
  double center;
  double halfwidth;

  bool contains(double phi) const {
    return phi > center - halfwidth && phi < center + halfwidth;
  }
};

CriticalNeighborhood critical_neighborhood(const PotentialParams& p, Side side);

/// The constant similarity [[1, i], [1, -i]] of the reduction.
Mat2C constant_similarity();

/// Side-dependent phase matrix diag(e^{+-i delta1/2}, e^{-+i delta1/2}).
Mat2C phase_matrix(const PotentialParams& p, Side side);

/// Composite basis map: v-hat = reduced_basis * exp(-T) * v.
Mat2C reduced_basis(const PotentialParams& p, Side side);

/// Summand t_k whose tail defines the transformation: T_n = -sum_{k>=n} t_k.
/// t_k is the oscillatory part of the transfer matrix minus (plus-side) or
/// plus (minus-side) the resonant antidiagonal wave kept in the reduced system.
Mat2C harris_lutz_summand(const PotentialParams& p, Side side, std::int64_t k, double phi);

/// The resonant term that remains in the reduced step at index n,
/// +-(|c| / (4 n sin omega1)) [[cos, sin], [sin, -cos]](2 (phi -+ omega1) n).
Mat2C reduced_resonant(const PotentialParams& p, Side side, std::int64_t n, double phi);

struct CertifiedMat {
  Mat2C value;
  double bound; // certified Frobenius-norm bound on the truncation error
};

/// T^side_n(phi) evaluated as a short explicit head plus exact tail identities:
/// the non-resonant waves reduce to log-type oscillatory tails (summation by
/// parts with certified truncation), and the near-resonant pair telescopes so
/// that only a difference with an O(phi - center) prefactor multiplies the
/// near-zero frequency tail. The returned bound covers all truncations.
///
/// phi must lie in U_side. Throws ConvergenceError when tol is unreachable.
CertifiedMat harris_lutz_T(const PotentialParams& p, Side side, std::int64_t n, double phi,
                           double tol = 1e-10);

/// Walks T_n forward with O(1) updates T_{n+1} = T_n + t_n after one
/// certified evaluation at the anchor index.
class HarrisLutzWalker {
  public:
    HarrisLutzWalker(const PotentialParams& p, Side side, std::int64_t n0, double phi,
                     double tol = 1e-10);

    std::int64_t n() const { return n_; }
    const Mat2C& T() const { return T_; }
    double bound() const { return bound_; }

    void advance() {
      T_ += harris_lutz_summand(*p_, side_, n_, phi_);
      ++n_;
    }

  private:
    const PotentialParams* p_;
    Side side_;
    double phi_;
    std::int64_t n_;
    Mat2C T_;
    double bound_;
};

struct ReducedSystemStep {
  Mat2C resonant;  // the (|c|/(4 n sin omega1)) rotation-reflection part, signed
  Mat2C remainder; // exact: full conjugated step minus I minus resonant
};

/// One step of the reduced system: conjugates M_n by exp(T) and the constant
/// basis change, then splits off the resonant part. The remainder is computed
/// exactly, never modeled.
ReducedSystemStep reduced_step(const PotentialParams& p, Side side, std::int64_t n, double phi,
                               double tol = 1e-10);

/// Same split, with the transformations at n and n+1 supplied by the caller
/// (walker-driven propagation).
ReducedSystemStep reduced_step_given(const PotentialParams& p, Side side, std::int64_t n,
                                     double phi, const Mat2C& T_n, const Mat2C& T_n1);

/// The reduced-system solution corresponding to orthogonal polynomials:
/// p-hat_n = basis * exp(-T_n) * Y_n^{-1} (P_n, P_{n+1})^T.
Vec2C p_hat(const PotentialParams& p, Side side, std::int64_t n, double phi,
            double tol = 1e-10);

/// Assembly used by streaming evaluations.
Vec2C p_hat_assemble(const PotentialParams& p, Side side, double phi, std::int64_t n,
                     const Mat2C& T_n, double P_n, double P_n1);

/// Smallest trajectory length for limit extraction at phi: the product must
/// pass through the resonance-dominated regime first.
std::int64_t n_min_for(double phi, double center);

struct LimitResult {
  Vec2C value;
  double error_estimate; // difference of the last two window averages
  bool converged;
  std::int64_t n_used;
};

/// Limit of p-hat_n for phi in U_side away from the center, via tail
/// averaging over one beat period of 2(phi - center) n (capped at N/10).
/// Non-convergence is reported through the flag, not thrown.
LimitResult p_hat_infinity(const PotentialParams& p, Side side, double phi, std::int64_t N,
                           double tol = 1e-6);

} // namespace wvn
