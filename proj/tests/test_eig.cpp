#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "qtomo/eig.hpp"

using cd = std::complex<double>;
using qtomo::hermitian_eig;
using qtomo::symmetric_tridiagonal_eig;

TEST_CASE("tridiagonal QL: trivial sizes") {
  const auto one = symmetric_tridiagonal_eig({3.5}, {});
  CHECK(one.eigenvalues[0] == 3.5);
  CHECK(one.first_components[0] == 1.0);

  // [[0, b], [b, 0]] has eigenvalues -b, +b and equal first components^2.
  const double b = 0.5590169943749475;
  const auto two = symmetric_tridiagonal_eig({0.0, 0.0}, {b});
  CHECK(std::abs(two.eigenvalues[0] + b) <= 1e-15);
  CHECK(std::abs(two.eigenvalues[1] - b) <= 1e-15);
  CHECK(std::abs(two.first_components[0] * two.first_components[0] - 0.5) <= 1e-14);
  CHECK(std::abs(two.first_components[1] * two.first_components[1] - 0.5) <= 1e-14);

  CHECK_THROWS_AS(symmetric_tridiagonal_eig({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_tridiagonal_eig({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("tridiagonal QL: 5-point Gauss-Hermite closed form") {
  // Jacobi matrix of the normalized Hermite functions: off-diagonals
  // sqrt((n+1)/2). H_5 roots are 0, +-sqrt((5 -+ sqrt(10))/2); weights follow
  // from 1/H_4(x)^2 up to the common normalization.
  std::vector<double> off(4);
  for (int n = 0; n < 4; ++n) off[n] = std::sqrt((n + 1) / 2.0);
  const auto eig = symmetric_tridiagonal_eig(std::vector<double>(5, 0.0), off);

  const double s10 = std::sqrt(10.0);
  const double inner = std::sqrt((5.0 - s10) / 2.0);
  const double outer = std::sqrt((5.0 + s10) / 2.0);
  const double nodes[5] = {-outer, -inner, 0.0, inner, outer};
  const double w_out = 0.3 / (14.0 + 4.0 * s10);
  const double w_in = 0.3 / (14.0 - 4.0 * s10);
  const double weights[5] = {w_out, w_in, 8.0 / 15.0, w_in, w_out};

  for (int k = 0; k < 5; ++k) {
    CHECK(std::abs(eig.eigenvalues[k] - nodes[k]) <= 1e-13);
    CHECK(std::abs(eig.first_components[k] * eig.first_components[k] - weights[k]) <= 1e-13);
  }
}

TEST_CASE("tridiagonal QL agrees with the independent Jacobi solver") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 2.0);

  for (int trial = 0; trial < 5; ++trial) {
    const int n = 5 + 9 * trial;
    std::vector<double> diag(n), off(n - 1);
    for (auto& v : diag) v = dist(rng);
    for (auto& v : off) v = pos(rng);

    std::vector<cd> dense(static_cast<size_t>(n) * n, cd{0.0, 0.0});
    for (int i = 0; i < n; ++i) dense[static_cast<size_t>(i) * n + i] = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
      dense[static_cast<size_t>(i) * n + i + 1] = off[i];
      dense[static_cast<size_t>(i + 1) * n + i] = off[i];
    }

    const auto ql = symmetric_tridiagonal_eig(diag, off);
    const auto jac = hermitian_eig(dense, n);

    double scale = 0.0;
    for (double v : jac.eigenvalues) scale = std::max(scale, std::abs(v));
    double sum_sq = 0.0;
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(ql.eigenvalues[k] - jac.eigenvalues[k]) <= 1e-12 * std::max(1.0, scale));
      const double w_ql = ql.first_components[k] * ql.first_components[k];
      const double w_jac = std::norm(jac.vectors[static_cast<size_t>(0) * n + k]);
      CHECK(std::abs(w_ql - w_jac) <= 1e-12);
      sum_sq += w_ql;
    }
    CHECK(std::abs(sum_sq - 1.0) <= 1e-13);
  }
}

TEST_CASE("hermitian Jacobi solver satisfies its defining equations") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int n = 24;

  std::vector<cd> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    a[static_cast<size_t>(i) * n + i] = dist(rng);
    for (int j = i + 1; j < n; ++j) {
      const cd v{dist(rng), dist(rng)};
      a[static_cast<size_t>(i) * n + j] = v;
      a[static_cast<size_t>(j) * n + i] = std::conj(v);
    }
  }

  const auto eig = hermitian_eig(a, n);

  double anorm = 0.0;
  for (const auto& v : a) anorm += std::norm(v);
  anorm = std::sqrt(anorm);

  // A V = V D
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      cd av{0.0, 0.0};
      for (int j = 0; j < n; ++j) {
        av += a[static_cast<size_t>(i) * n + j] * eig.vectors[static_cast<size_t>(j) * n + k];
      }
      const cd vd = eig.eigenvalues[k] * eig.vectors[static_cast<size_t>(i) * n + k];
      CHECK(std::abs(av - vd) <= 1e-12 * anorm);
    }
  }
  // V^H V = 1
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      cd dot{0.0, 0.0};
      for (int i = 0; i < n; ++i) {
        dot += std::conj(eig.vectors[static_cast<size_t>(i) * n + k]) *
               eig.vectors[static_cast<size_t>(i) * n + l];
      }
      if (k == l) dot -= 1.0;
      CHECK(std::abs(dot) <= 1e-12);
    }
  }
  // ascending order
  for (int k = 0; k + 1 < n; ++k) CHECK(eig.eigenvalues[k] <= eig.eigenvalues[k + 1]);
}

TEST_CASE("hermitian Jacobi solver on a diagonal matrix") {
  const int n = 4;
  std::vector<cd> a(static_cast<size_t>(n) * n, cd{0.0, 0.0});
  const double d[4] = {2.0, -1.0, 0.5, 3.0};
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = d[i];
  const auto eig = hermitian_eig(a, n);
  CHECK(eig.eigenvalues[0] == -1.0);
  CHECK(eig.eigenvalues[1] == 0.5);
  CHECK(eig.eigenvalues[2] == 2.0);
  CHECK(eig.eigenvalues[3] == 3.0);
  CHECK_THROWS_AS(hermitian_eig({}, 2), std::invalid_argument);
}
