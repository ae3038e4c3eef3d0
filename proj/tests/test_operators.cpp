#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qtomo/operators.hpp"

using cd = std::complex<double>;
using qtomo::algebra_residual;
using qtomo::build_ladder;
using qtomo::build_momentum;
using qtomo::build_position;
using qtomo::build_quadrature;
using qtomo::commutator_residual;
using qtomo::DeformationParams;
using qtomo::OperatorMatrix;

namespace {
constexpr double pi = std::numbers::pi;

double max_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
  }
  return worst;
}
}  // namespace

TEST_CASE("ladder operators") {
  const DeformationParams half(0.5);

  const auto [a1, ad1] = build_ladder(1, half);
  CHECK(a1.at(0, 0) == cd{0.0, 0.0});  // A|0> = 0

  const auto [a, ad] = build_ladder(3, half);
  CHECK(a.at(0, 1).real() == 1.0);  // sqrt([1]) = 1
  CHECK(std::abs(a.at(1, 2).real() - 1.1180339887498949) <= 1e-15);  // sqrt([2])
  CHECK(a.at(1, 0) == cd{0.0, 0.0});
  CHECK(a.at(2, 2) == cd{0.0, 0.0});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(ad.at(i, j) == std::conj(a.at(j, i)));
  }

  const auto [au, adu] = build_ladder(3, DeformationParams(1.0));
  CHECK(au.at(0, 1).real() == 1.0);
  CHECK(std::abs(au.at(1, 2).real() - std::sqrt(2.0)) <= 1e-15);

  CHECK_THROWS_AS(build_ladder(0, half), std::invalid_argument);
}

TEST_CASE("quadrature matrix values and special angles") {
  const DeformationParams half(0.5);

  const auto x = build_quadrature(2, half, 0.0);
  CHECK(std::abs(x.at(0, 1).real() - 0.55901699437494745) <= 1e-15);
  CHECK(x.at(0, 1).imag() == 0.0);
  CHECK(x.at(0, 0) == cd{0.0, 0.0});

  const auto xu = build_quadrature(2, DeformationParams(1.0), 0.0);
  CHECK(std::abs(xu.at(0, 1).real() - 1.0 / std::sqrt(2.0)) <= 1e-15);

  const DeformationParams p(0.8);
  CHECK(max_diff(build_quadrature(12, p, 0.0), build_position(12, p)) == 0.0);
  CHECK(max_diff(build_quadrature(12, p, pi / 2.0), build_momentum(12, p)) <= 1e-15);
}

TEST_CASE("quadrature hermiticity and theta wrapping") {
  const DeformationParams p(0.7);
  const auto x = build_quadrature(16, p, 1.1);
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) CHECK(x.at(i, j) == std::conj(x.at(j, i)));
  }

  // theta + 2*pi rounds at the call site, so the wrapped matrices agree to
  // roundoff, and exactly for theta = 0 vs 2*pi.
  CHECK(max_diff(build_quadrature(16, p, 1.1 + 2.0 * pi), x) <= 1e-13);
  CHECK(max_diff(build_quadrature(16, p, 2.0 * pi), build_quadrature(16, p, 0.0)) == 0.0);
  CHECK(max_diff(build_quadrature(16, p, -1.2), build_quadrature(16, p, 2.0 * pi - 1.2)) <=
        1e-13);
}

TEST_CASE("theta covariance under the number-phase unitary") {
  const DeformationParams p(0.7);
  const double theta = 1.1;
  const auto xt = build_quadrature(16, p, theta);
  const auto x0 = build_quadrature(16, p, 0.0);
  double worst = 0.0;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      const cd u_i{std::cos(i * theta), std::sin(i * theta)};
      const cd u_j{std::cos(j * theta), -std::sin(j * theta)};
      worst = std::max(worst, std::abs(xt.at(i, j) - u_i * x0.at(i, j) * u_j));
    }
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("defining algebra holds entrywise off the truncation artifact") {
  CHECK(algebra_residual(16, DeformationParams(0.5)) <= 1e-12);
  CHECK(algebra_residual(2, DeformationParams(1.0)) <= 1e-15);
  CHECK(algebra_residual(8, DeformationParams(0.9)) <= 1e-12);
  CHECK_THROWS_AS(algebra_residual(1, DeformationParams(0.5)), std::invalid_argument);
}

TEST_CASE("deformed commutator identity on the interior block") {
  CHECK(commutator_residual(16, DeformationParams(0.5)) <= 1e-12);
  CHECK(commutator_residual(16, DeformationParams(1.0)) <= 1e-12);
  CHECK(commutator_residual(4, DeformationParams(0.7)) <= 1e-12);
  CHECK_THROWS_AS(commutator_residual(3, DeformationParams(0.5)), std::invalid_argument);
}
