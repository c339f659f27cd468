#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace wvn {

using Complex = std::complex<double>;

struct Vec2C {
  Complex x{0.0, 0.0};
  Complex y{0.0, 0.0};

  Vec2C() = default;
  Vec2C(Complex a, Complex b) : x(a), y(b) {}

  Vec2C operator+(const Vec2C& o) const { return {x + o.x, y + o.y}; }
  Vec2C operator-(const Vec2C& o) const { return {x - o.x, y - o.y}; }
  Vec2C operator*(Complex s) const { return {x * s, y * s}; }
  Vec2C operator/(Complex s) const { return {x / s, y / s}; }
  Vec2C& operator+=(const Vec2C& o) {
    x += o.x;
    y += o.y;
    return *this;
  }

  double norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }
};

inline Complex dot(const Vec2C& a, const Vec2C& b) {
  // Hermitian inner product, conjugate-linear in the first argument.
  return std::conj(a.x) * b.x + std::conj(a.y) * b.y;
}

/// Complex 2x2 matrix, the currency of all transfer-matrix recursions.
struct Mat2C {
  Complex a11{0.0, 0.0}, a12{0.0, 0.0};
  Complex a21{0.0, 0.0}, a22{0.0, 0.0};

  Mat2C() = default;
  Mat2C(Complex m11, Complex m12, Complex m21, Complex m22)
      : a11(m11), a12(m12), a21(m21), a22(m22) {}

  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2C zero() { return {}; }
  static Mat2C diag(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

  Mat2C operator+(const Mat2C& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }
  Mat2C operator-(const Mat2C& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }
  Mat2C operator*(const Mat2C& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  Vec2C operator*(const Vec2C& v) const {
    return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
  }
  Mat2C operator*(Complex s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
  Mat2C& operator+=(const Mat2C& o) {
    a11 += o.a11;
    a12 += o.a12;
    a21 += o.a21;
    a22 += o.a22;
    return *this;
  }

  Complex trace() const { return a11 + a22; }
  Complex det() const { return a11 * a22 - a12 * a21; }

  Mat2C inverse() const {
    const Complex d = det();
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  double frobenius_norm() const {
    return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
  }
};

inline Mat2C operator*(Complex s, const Mat2C& m) { return m * s; }

/// [[0, e^{i theta}], [e^{-i theta}, 0]].
inline Mat2C antidiag_phase(double theta) {
  const Complex e = std::polar(1.0, theta);
  return {0.0, e, std::conj(e), 0.0};
}

/// [[cos t, sin t], [sin t, -cos t]] — the rotation-reflection involution.
inline Mat2C rotation_reflection(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, s, s, -c};
}

/// sinh(s)/s, stable for small |s|.
inline Complex sinhc(Complex s) {
  if (std::abs(s) < 1e-4) {
    const Complex s2 = s * s;
    return 1.0 + s2 / 6.0 * (1.0 + s2 / 20.0);
  }
  return std::sinh(s) / s;
}

/// Matrix exponential of a 2x2 complex matrix via the closed form
/// exp(mu I + Y) = e^mu (cosh(sigma) I + sinhc(sigma) Y) with Y traceless,
/// sigma^2 = (tr/2)^2 - det. No scaling/squaring needed.
inline Mat2C expm(const Mat2C& m) {
  const Complex mu = m.trace() * 0.5;
  const Complex sigma2 = mu * mu - m.det();
  const Complex sigma = std::sqrt(sigma2);
  const Complex ch = std::cosh(sigma);
  const Complex sh = sinhc(sigma);
  const Complex emu = std::exp(mu);
  Mat2C y = m;
  y.a11 -= mu;
  y.a22 -= mu;
  Mat2C r = Mat2C::identity() * ch + y * sh;
  return r * emu;
}

/// Singular values (sigma1 >= sigma2 >= 0) of a complex 2x2 matrix,
/// closed form through the eigenvalues of M*M.
inline std::pair<double, double> singular_values(const Mat2C& m) {
  const double t = std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22);
  const double d = std::norm(m.det());
  const double h = t * 0.5;
  double disc = h * h - d;
  if (disc < 0.0) disc = 0.0;
  const double mu1 = h + std::sqrt(disc);
  const double mu2 = (mu1 > 0.0) ? d / mu1 : 0.0; // avoids cancellation
  return {std::sqrt(mu1), std::sqrt(mu2)};
}

/// Unit right-singular vector for the smaller singular value.
inline Vec2C right_singular_vector_min(const Mat2C& m) {
  // Eigenvector of G = M*M for its smaller eigenvalue.
  const Complex g11 = std::conj(m.a11) * m.a11 + std::conj(m.a21) * m.a21;
  const Complex g12 = std::conj(m.a11) * m.a12 + std::conj(m.a21) * m.a22;
  const Complex g22 = std::conj(m.a12) * m.a12 + std::conj(m.a22) * m.a22;
  const double t = g11.real() + g22.real();
  const double det = (g11 * g22 - g12 * std::conj(g12)).real();
  double disc = t * t * 0.25 - det;
  if (disc < 0.0) disc = 0.0;
  const double mu1 = t * 0.5 + std::sqrt(disc);
  const double mu2 = (mu1 > 0.0) ? det / mu1 : 0.0;

  Vec2C v1{g12, Complex(mu2) - g11};
  Vec2C v2{Complex(mu2) - g22, std::conj(g12)};
  Vec2C v = (v1.norm() >= v2.norm()) ? v1 : v2;
  const double n = v.norm();
  if (n < 1e-300) return {0.0, 1.0}; // G is a multiple of I, any direction works
  return v / Complex(n);
}

} // namespace wvn
