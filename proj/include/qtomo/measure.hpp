#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "qtomo/deformation.hpp"

namespace qtomo {

/// Discrete spectral measure of the truncated theta = 0 quadrature operator:
/// Gauss-quadrature nodes and weights obtained from the Jacobi matrix. The
/// weights stand in for the |Psi_0|^2 mass, which has no closed form; at every
/// finite truncation the discrete measure is exactly orthonormalizing.
struct SpectralMeasure {
  int truncation = 0;
  double q = 1.0;
  std::vector<double> nodes;    ///< ascending, symmetric about 0
  std::vector<double> weights;  ///< positive, sum = 1
};

/// Diagonalizes the symmetric tridiagonal quadrature matrix; nodes are the
/// eigenvalues and each weight is the squared first component of the
/// corresponding orthonormal eigenvector. The induced rule integrates
/// J_m * J_n exactly for m + n <= 2N - 1.
SpectralMeasure compute_measure(int truncation, const DeformationParams& p);

/// Fock state n in the discrete quadrature basis:
/// psi_n[k] = J_n(x_k) e^{-i n theta} sqrt(w_k).
struct DiscreteWavefunction {
  int n = 0;
  double theta = 0.0;
  std::vector<std::complex<double>> values;
};

/// Throws IndexOutOfTruncation for n >= truncation, where the discrete
/// representation is no longer faithful.
DiscreteWavefunction eval_psi(int n, double theta, const SpectralMeasure& m);

/// max_{a,b <= n_max} |sum_k J_a(x_k) J_b(x_k) w_k - delta_ab|. Requires
/// n_max < truncation; <= 1e-10 by Gauss-rule exactness.
double orthonormality_residual(const SpectralMeasure& m, int n_max);

/// Unitarity defect of the N x N matrix psi_a[k]: the larger of
/// max |(Psi Psi^H - 1)| and max |(Psi^H Psi - 1)|. Realizes the discrete
/// completeness of the position kets. OpenMP-parallel.
double completeness_residual(const SpectralMeasure& m, double theta);

/// Applies the truncated quadrature matrix to the conjugated wavefunction
/// columns and measures max |X_theta v_k - x_k v_k| over rows n < N-1 (the
/// last row is the truncation boundary).
double eigenrelation_residual(const SpectralMeasure& m, double theta);

/// Debug dump: columns k,x,w with full double precision.
void write_measure_csv(const SpectralMeasure& m, std::ostream& os);

/// J_n(x_k) for all nodes k and n = 0..n_max, row-major with node index k as
/// the slow index: table[k * (n_max + 1) + n]. OpenMP-parallel over nodes.
std::vector<double> j_node_table(const SpectralMeasure& m, int n_max);

/// Half-neighbor spacings used to convert per-node mass into a density
/// estimate (O(1/N) accurate); one-sided at the ends.
std::vector<double> node_spacings(const SpectralMeasure& m);

namespace reference {

/// Serial transcription of completeness_residual, kept for testing the
/// parallel kernel against.
double completeness_residual(const SpectralMeasure& m, double theta);

}  // namespace reference

}  // namespace qtomo
