#pragma once

#include <span>
#include <vector>

#include "qtomo/deformation.hpp"

namespace qtomo {

/// Values J_0(x)..J_{n_max}(x) of the deformed polynomial family at one point.
struct PolySequence {
  double q;
  double x;
  std::vector<double> values;
};

/// Evaluates the deformed polynomials by their three-term recurrence
///   J_{n+1} = ( 2x/sqrt(1+q^2) * J_n - sqrt([n]) * J_{n-1} ) / sqrt([n+1]),
/// J_0 = 1. Forward recursion is stable inside the spectral interval, which
/// is where all quadrature nodes live. Throws OverflowError once any value
/// passes 1e300 (x far outside the spectrum).
PolySequence eval_J(int n_max, const DeformationParams& p, double x);

/// Normalized Hermite values h_n(x) = H_n(x) / sqrt(2^n n!), n = 0..n_max,
/// from the raw Hermite recurrence H_{n+1} = 2x H_n - 2n H_{n-1}. This is the
/// q -> 1 reference for eval_J and is used only as an oracle.
std::vector<double> hermite_reference(int n_max, double x);

namespace detail {

/// Recurrence core shared with the measure/tomogram kernels. out receives
/// J_0..J_{out.size()-1}; sqrt_q_num[n] must hold sqrt([n]) for every index
/// used, and t_factor = 2/sqrt(1+q^2).
void eval_J_inplace(std::span<double> out, std::span<const double> sqrt_q_num,
                    double t_factor, double x);

/// sqrt([0])..sqrt([n_max]) for reuse across many evaluation points.
std::vector<double> sqrt_q_numbers(int n_max, const DeformationParams& p);

}  // namespace detail

}  // namespace qtomo
