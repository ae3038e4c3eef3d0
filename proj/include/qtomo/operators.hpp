#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qtomo/deformation.hpp"

namespace qtomo {

enum class OperatorLabel { Annihilation, Creation, Position, Momentum, Quadrature };

/// Dense complex matrix of an operator truncated to the first `dim` Fock
/// states. Dense storage is deliberate: dim stays small (<= 256) and the
/// tridiagonal structure is exploited only inside the measure eigensolver.
struct OperatorMatrix {
  int dim = 0;
  OperatorLabel label = OperatorLabel::Annihilation;
  double theta = 0.0;  ///< phase parameter, meaningful for Quadrature
  std::vector<std::complex<double>> entries;  ///< row-major dim x dim

  std::complex<double>& at(int i, int j) {
    return entries[static_cast<size_t>(i) * dim + j];
  }
  const std::complex<double>& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * dim + j];
  }
};

/// Annihilation/creation pair: A|n> = sqrt([n]) |n-1>, so A has sqrt([n]) at
/// (n-1, n); the creation matrix is the conjugate transpose.
std::pair<OperatorMatrix, OperatorMatrix> build_ladder(int truncation,
                                                       const DeformationParams& p);

/// X = quad_scale * (A^dag + A), Hermitian tridiagonal with zero diagonal.
OperatorMatrix build_position(int truncation, const DeformationParams& p);

/// P = i * quad_scale * (A^dag - A).
OperatorMatrix build_momentum(int truncation, const DeformationParams& p);

/// Homodyne quadrature X_theta = quad_scale * (A e^{-i theta} + A^dag e^{i theta}).
/// theta is wrapped into [0, 2*pi); X_0 = X and X_{pi/2} = P.
OperatorMatrix build_quadrature(int truncation, const DeformationParams& p,
                                double theta);

/// Max |entry| of (A A^dag - q^2 A^dag A - 1), skipping the (N-1, N-1)
/// diagonal element, which is a pure truncation artifact. <= 1e-12 for
/// truncations up to 128.
double algebra_residual(int truncation, const DeformationParams& p);

/// Max |entry| of ([X, P] - i(1 + (q^2-1)/(q^2+1) (X^2 + P^2))) over the
/// top-left (N-2) x (N-2) block, away from the truncation boundary.
double commutator_residual(int truncation, const DeformationParams& p);

namespace detail {

/// Wraps theta into [0, 2*pi). remainder() is exact, so 2*pi maps to 0.
double wrap_theta(double theta);

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace detail

}  // namespace qtomo
