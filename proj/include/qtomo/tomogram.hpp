#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qtomo/deformation.hpp"
#include "qtomo/measure.hpp"

namespace qtomo {

/// q-deformed coherent state |alpha> truncated to N Fock coefficients
/// c_n = alpha^n / (sqrt([n]!) sqrt(E_q(|alpha|^2))), with a certified bound
/// on the probability mass beyond the cutoff.
struct QCoherentState {
  std::complex<double> alpha;
  double q = 1.0;
  std::vector<std::complex<double>> coeffs;
  double tail_bound = 0.0;  ///< >= sum_{n >= N} |c_n|^2
};

/// Requires |alpha|^2 < conv_radius (OutsideConvergenceDisk otherwise) and a
/// truncation large enough that tail_bound <= tol (TruncationTooSmall).
QCoherentState make_coherent(std::complex<double> alpha, const DeformationParams& p,
                             int truncation, double tol = 1e-10);

/// Per-node tomogram mass of Fock state n: p[k] = J_n(x_k)^2 w_k. Independent
/// of theta; sums to 1 for n below the truncation.
std::vector<double> tomogram_fock(int n, double theta, const SpectralMeasure& m);

/// Per-node tomogram mass of a coherent state:
/// p[k] = w_k |sum_n c_n J_n(x_k) e^{-i n theta}|^2.
/// Gauss exactness makes sum_k p[k] = sum_n |c_n|^2, i.e. 1 minus the true tail.
std::vector<double> tomogram_coherent(const QCoherentState& state, double theta,
                                      const SpectralMeasure& m);

/// Squared modulus of the classical coherent-state quadrature amplitude:
/// pi^{-1/2} exp(-(x - sqrt(2) Re(alpha e^{-i theta}))^2). Integrates to 1.
double gaussian_oracle(std::complex<double> alpha, double theta, double x);

/// Tomogram sampled over a theta grid. probabilities and densities are stored
/// theta-major: value for (theta_t, node_k) at index t * N + k.
struct TomogramGrid {
  std::vector<double> theta_values;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> probabilities;  ///< per-node mass
  std::vector<double> densities;      ///< mass / half-neighbor spacing
};

/// OpenMP-parallel over theta rows; each row is computed by a fixed serial
/// inner loop, so results do not depend on the thread count.
TomogramGrid coherent_grid(const QCoherentState& state, std::span<const double> thetas,
                           const SpectralMeasure& m);

TomogramGrid fock_grid(int n, std::span<const double> thetas, const SpectralMeasure& m);

namespace reference {

/// Straightforward serial transcription of coherent_grid, kept for testing.
TomogramGrid coherent_grid(const QCoherentState& state, std::span<const double> thetas,
                           const SpectralMeasure& m);

/// Brute-force tomogram through dense eigenvectors of the quadrature matrix:
/// diagonalizes X_theta with the complex Jacobi solver and returns
/// |<x_k|Phi>|^2 in ascending-eigenvalue order. Independent of the
/// recurrence/measure pipeline; used as its oracle.
std::vector<double> tomogram_dense(std::span<const std::complex<double>> fock_coeffs,
                                   const DeformationParams& p, double theta);

}  // namespace reference

}  // namespace qtomo
