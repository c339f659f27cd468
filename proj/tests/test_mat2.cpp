#include <doctest.h>

#include <random>

#include "wvn/mat2.hpp"

using namespace wvn;

namespace {

Mat2C random_matrix(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto z = [&]() { return Complex(u(rng), u(rng)) * scale; };
  return {z(), z(), z(), z()};
}

} // namespace

TEST_CASE("mat2 algebra basics") {
  const Mat2C a{1.0, 2.0, Complex(0.0, 1.0), -1.0};
  CHECK(a.det() == Complex(-1.0, -2.0));
  CHECK((a * a.inverse() - Mat2C::identity()).frobenius_norm() < 1e-15);
  CHECK(a.trace() == Complex(0.0, 0.0));
}

TEST_CASE("rotation-reflection is an involution") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    const Mat2C c = rotation_reflection(u(rng));
    CHECK((c * c - Mat2C::identity()).frobenius_norm() < 1e-14);
  }
}

TEST_CASE("antidiag phase similarity against rotation-reflection") {
  // [[0, e^{i t}], [e^{-i t}, 0]] = Q C(t) Q^{-1} with Q = [[1, i], [1, -i]].
  const Mat2C q{1.0, Complex(0.0, 1.0), 1.0, Complex(0.0, -1.0)};
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int i = 0; i < 20; ++i) {
    const double t = u(rng);
    const Mat2C lhs = antidiag_phase(t);
    const Mat2C rhs = q * rotation_reflection(t) * q.inverse();
    CHECK((lhs - rhs).frobenius_norm() < 1e-14);
  }
}

TEST_CASE("expm closed form against the series") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const Mat2C m = random_matrix(rng, 0.4);
    // Plain Taylor series, enough terms for this norm.
    Mat2C sum = Mat2C::identity();
    Mat2C term = Mat2C::identity();
    for (int k = 1; k <= 24; ++k) {
      term = term * m * Complex(1.0 / k);
      sum += term;
    }
    CHECK((expm(m) - sum).frobenius_norm() < 1e-13);
  }
}

TEST_CASE("expm inverse identity") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    const Mat2C m = random_matrix(rng, 1.5);
    const Mat2C prod = expm(m) * expm(m * Complex(-1.0));
    CHECK((prod - Mat2C::identity()).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("singular values: known cases") {
  CHECK(singular_values(Mat2C::identity()).first == doctest::Approx(1.0));
  CHECK(singular_values(Mat2C::identity()).second == doctest::Approx(1.0));
  const auto d = singular_values(Mat2C::diag(3.0, 0.5));
  CHECK(d.first == doctest::Approx(3.0));
  CHECK(d.second == doctest::Approx(0.5));
  const auto r1 = singular_values(Mat2C{1.0, 1.0, 1.0, 1.0});
  CHECK(r1.first == doctest::Approx(2.0));
  CHECK(r1.second == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("singular values multiply to |det|") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Mat2C m = random_matrix(rng, 2.0);
    const auto [s1, s2] = singular_values(m);
    CHECK(s1 * s2 == doctest::Approx(std::abs(m.det())).epsilon(1e-10));
    CHECK(s1 >= s2);
  }
}

TEST_CASE("right singular vector attains the smaller singular value") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const Mat2C m = random_matrix(rng, 2.0);
    const auto [s1, s2] = singular_values(m);
    const Vec2C v = right_singular_vector_min(m);
    CHECK(v.norm() == doctest::Approx(1.0));
    CHECK((m * v).norm() == doctest::Approx(s2).epsilon(1e-8));
  }
}
