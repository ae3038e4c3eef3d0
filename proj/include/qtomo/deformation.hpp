#pragma once

#include "qtomo/errors.hpp"

namespace qtomo {

/// Deformation parameter q together with the derived constants used all over
/// the library. q = 1 selects the exact classical (undeformed) branch.
struct DeformationParams {
  double q;            ///< deformation parameter, in (0, 1]
  double q_sq;         ///< q^2
  double quad_scale;   ///< sqrt(1 + q^2) / 2, the quadrature prefactor
  double conv_radius;  ///< 1 / (1 - q^2) for q < 1, +inf for q = 1

  explicit DeformationParams(double q_value);

  bool classical() const { return q == 1.0; }
};

/// q-number [n] = (1 - q^{2n}) / (1 - q^2); equals n in the classical branch.
/// Nonnegative, strictly increasing in n, bounded by conv_radius.
double q_number(int n, const DeformationParams& p);

/// q-factorial [n]! = prod_{k=1..n} [k], with [0]! = 1.
/// Throws OverflowError if the product leaves the double range.
double q_factorial(int n, const DeformationParams& p);

/// q-exponential E_q(z) = sum_n z^n / [n]!, summed until the certified
/// geometric tail bound drops below tol. Requires 0 <= z < conv_radius;
/// throws DivergentSeries otherwise. Classical branch returns exp(z).
double q_exponential(double z, const DeformationParams& p, double tol = 1e-12);

}  // namespace qtomo
