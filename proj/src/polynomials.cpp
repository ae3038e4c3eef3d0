#include "qtomo/polynomials.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtomo {

namespace {
// Beyond this the polynomials are growing without bound and x is far outside
// the spectral interval.
constexpr double overflow_limit = 1e300;
}  // namespace

namespace detail {

std::vector<double> sqrt_q_numbers(int n_max, const DeformationParams& p) {
  std::vector<double> s(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) s[static_cast<size_t>(n)] = std::sqrt(q_number(n, p));
  return s;
}

void eval_J_inplace(std::span<double> out, std::span<const double> sqrt_q_num,
                    double t_factor, double x) {
  const double t = t_factor * x;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = t / sqrt_q_num[1];  // [1] = 1
  for (size_t n = 1; n + 1 < out.size(); ++n) {
    out[n + 1] = (t * out[n] - sqrt_q_num[n] * out[n - 1]) / sqrt_q_num[n + 1];
  }
  for (size_t n = 1; n < out.size(); ++n) {
    if (!(std::abs(out[n]) <= overflow_limit)) {
      throw OverflowError("eval_J: |J_" + std::to_string(n) + "(" + std::to_string(x) +
                          ")| exceeds 1e300");
    }
  }
}

}  // namespace detail

PolySequence eval_J(int n_max, const DeformationParams& p, double x) {
  if (n_max < 0) throw std::invalid_argument("eval_J: n_max must be nonnegative");
  const auto sq = detail::sqrt_q_numbers(n_max, p);
  PolySequence seq{p.q, x, std::vector<double>(static_cast<size_t>(n_max) + 1)};
  detail::eval_J_inplace(seq.values, sq, 2.0 / std::sqrt(1.0 + p.q_sq), x);
  return seq;
}

std::vector<double> hermite_reference(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("hermite_reference: n_max must be nonnegative");
  std::vector<double> h(static_cast<size_t>(n_max) + 1);
  h[0] = 1.0;
  double h_prev = 1.0;      // H_{n-1}
  double h_cur = 2.0 * x;   // H_n, starting at n = 1
  double norm = 1.0;        // sqrt(2^n n!)
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      const double next = 2.0 * x * h_cur - 2.0 * (n - 1) * h_prev;
      h_prev = h_cur;
      h_cur = next;
    }
    norm *= std::sqrt(2.0 * n);
    if (!(std::abs(h_cur) <= overflow_limit) || !std::isfinite(norm)) {
      throw OverflowError("hermite_reference: |H_" + std::to_string(n) +
                          "| exceeds 1e300");
    }
    h[static_cast<size_t>(n)] = h_cur / norm;
  }
  return h;
}

}  // namespace qtomo
