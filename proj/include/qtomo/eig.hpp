#pragma once

#include <complex>
#include <vector>

#include "qtomo/errors.hpp"

namespace qtomo {

/// Eigenvalues of a real symmetric tridiagonal matrix together with the first
/// component of each orthonormal eigenvector -- everything Gauss quadrature
/// needs from the Jacobi matrix.
struct TridiagEig {
  std::vector<double> eigenvalues;       ///< ascending
  std::vector<double> first_components;  ///< row 0 of the eigenvector matrix
};

/// Implicit-shift QL iteration. diag holds the n diagonal entries, offdiag the
/// n-1 subdiagonal entries. Only the first row of the rotation product is
/// accumulated, so the cost is O(n^2). Throws EigensolveFailure if any
/// eigenvalue needs more than max_iter QL sweeps (not expected for n <= 1024).
TridiagEig symmetric_tridiagonal_eig(std::vector<double> diag,
                                     std::vector<double> offdiag,
                                     int max_iter = 50);

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Deliberately independent of the tridiagonal QL path: it backs
/// the dense brute-force checks.
struct HermitianEig {
  std::vector<double> eigenvalues;             ///< ascending
  std::vector<std::complex<double>> vectors;   ///< row-major n x n, k-th column
                                               ///< = eigenvector of eigenvalue k
};

HermitianEig hermitian_eig(std::vector<std::complex<double>> a, int n,
                           int max_sweeps = 60);

}  // namespace qtomo
