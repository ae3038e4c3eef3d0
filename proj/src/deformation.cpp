#include "qtomo/deformation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qtomo {

DeformationParams::DeformationParams(double q_value) : q(q_value) {
  if (!(q > 0.0) || q > 1.0) {
    throw std::invalid_argument("deformation parameter q must lie in (0, 1], got " +
                                std::to_string(q_value));
  }
  q_sq = q * q;
  quad_scale = std::sqrt(1.0 + q_sq) / 2.0;
  // 1/(1 - q^2) evaluated through expm1 so that q_number saturates at exactly
  // this value; for q near 1 the direct 1 - q*q loses half the digits.
  conv_radius = classical() ? std::numeric_limits<double>::infinity()
                            : -1.0 / std::expm1(2.0 * std::log(q));
}

double q_number(int n, const DeformationParams& p) {
  if (n < 0) throw std::invalid_argument("q_number: n must be nonnegative");
  if (p.classical()) return static_cast<double>(n);
  if (n == 0) return 0.0;
  const double two_log_q = 2.0 * std::log(p.q);
  // (1 - q^{2n}) / (1 - q^2) without cancellation near q = 1.
  return std::expm1(n * two_log_q) / std::expm1(two_log_q);
}

double q_factorial(int n, const DeformationParams& p) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  double f = 1.0;
  for (int k = 1; k <= n; ++k) {
    f *= q_number(k, p);
    if (!std::isfinite(f)) {
      throw OverflowError("q_factorial: [" + std::to_string(n) +
                          "]! exceeds the floating-point range (overflow at k=" +
                          std::to_string(k) + ")");
    }
  }
  return f;
}

double q_exponential(double z, const DeformationParams& p, double tol) {
  if (!(z >= 0.0)) throw std::invalid_argument("q_exponential: z must be nonnegative");
  if (!(tol > 0.0)) throw std::invalid_argument("q_exponential: tol must be positive");
  if (p.classical()) return std::exp(z);
  if (z >= p.conv_radius) {
    throw DivergentSeries("q_exponential: z = " + std::to_string(z) +
                          " is outside the convergence radius 1/(1-q^2) = " +
                          std::to_string(p.conv_radius));
  }
  // Term ratio z/[n+1] decreases towards z(1-q^2) < 1, so once it drops below
  // one the remaining tail is bounded by the geometric sum term * r/(1-r).
  double sum = 1.0;
  double term = 1.0;
  constexpr int max_terms = 1'000'000;
  for (int n = 1; n <= max_terms; ++n) {
    term *= z / q_number(n, p);
    sum += term;
    if (!std::isfinite(sum)) {
      throw OverflowError("q_exponential: E_q(" + std::to_string(z) +
                          ") exceeds the floating-point range");
    }
    const double r = z / q_number(n + 1, p);
    if (r < 1.0 && term * r / (1.0 - r) < tol) return sum;
  }
  throw DivergentSeries("q_exponential: series did not converge within " +
                        std::to_string(max_terms) +
                        " terms; z lies too close to the convergence radius");
}

}  // namespace qtomo
