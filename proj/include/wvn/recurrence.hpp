#pragma once

#include <cstdint>
#include <vector>

#include "wvn/mat2.hpp"
#include "wvn/potential.hpp"

namespace wvn {

/// Orthogonal polynomials P_1..P_N: P_1 = 1, P_2 = lambda - b_1,
/// P_{n+1} = (lambda - b_n) P_n - P_{n-1}. Requires N >= 2.
std::vector<double> orthogonal_polynomials(const PotentialParams& p, double lambda,
                                           std::int64_t N);

/// Streaming form of the same recurrence; O(1) state, indexed from n = 1.
class PolynomialSequence {
  public:
    PolynomialSequence(const PotentialParams& p, double lambda)
        : p_(&p), lambda_(lambda), n_(1), pn_(1.0), pnext_(lambda - p.b(1)) {}

    std::int64_t n() const { return n_; }
    double value() const { return pn_; }        // P_n
    double next_value() const { return pnext_; } // P_{n+1}

    void advance() {
      const double pnew = (lambda_ - p_->b(n_ + 1)) * pnext_ - pn_;
      pn_ = pnext_;
      pnext_ = pnew;
      ++n_;
    }

  private:
    const PotentialParams* p_;
    double lambda_;
    std::int64_t n_;
    double pn_, pnext_;
};

/// Coefficient matrix of the scalar equation in vector form:
/// (u_n, u_{n+1})^T = A_n (u_{n-1}, u_n)^T with A_n = [[0, 1], [-1, lambda - b_n]].
Mat2C scalar_step_matrix(const PotentialParams& p, std::int64_t n, double lambda);

/// Variation-of-parameters basis Y_n = [[z^-n, z^n], [z^-(n+1), z^(n+1)]],
/// z = e^{i phi}; det Y_n = 2 i sin(phi).
Mat2C variation_matrix(double phi, std::int64_t n);
Mat2C variation_matrix_inverse(double phi, std::int64_t n);

/// Transfer matrix of the oscillator-frame system v_{n+1} = M_n(phi) v_n:
/// M_n = I + (b_{n+1} / (2 i sin phi)) [[1, e^{2 i phi (n+1)}], [-e^{-2 i phi (n+1)}, -1]].
/// phi must lie strictly inside (0, pi).
Mat2C transfer_matrix(const PotentialParams& p, std::int64_t n, double phi);

struct TransferParts {
  Mat2C oscillatory; // the c-part, split into diagonal and two antidiagonal waves
  Mat2C summable;    // the q-part
};

/// Decomposition M_n = I + oscillatory + summable, exact.
TransferParts transfer_matrix_parts(const PotentialParams& p, std::int64_t n, double phi);

/// The oscillatory (c-driven) part alone; cheaper when the q image is not needed.
Mat2C oscillatory_part(const PotentialParams& p, std::int64_t n, double phi);

} // namespace wvn
