#include "qtomo/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtomo {

namespace detail {

double wrap_theta(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(theta, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix c{a.dim, a.label, 0.0,
                   std::vector<std::complex<double>>(a.entries.size())};
  const int n = a.dim;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> s{0.0, 0.0};
      for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  }
  return c;
}

}  // namespace detail

namespace {

OperatorMatrix zero_matrix(int n, OperatorLabel label) {
  return OperatorMatrix{n, label, 0.0,
                        std::vector<std::complex<double>>(
                            static_cast<size_t>(n) * static_cast<size_t>(n))};
}

void require_dim(int n, int minimum, const char* who) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(who) + ": truncation must be >= " +
                                std::to_string(minimum));
  }
}

}  // namespace

std::pair<OperatorMatrix, OperatorMatrix> build_ladder(int truncation,
                                                       const DeformationParams& p) {
  require_dim(truncation, 1, "build_ladder");
  auto a = zero_matrix(truncation, OperatorLabel::Annihilation);
  auto ad = zero_matrix(truncation, OperatorLabel::Creation);
  for (int n = 1; n < truncation; ++n) {
    const double v = std::sqrt(q_number(n, p));
    a.at(n - 1, n) = v;
    ad.at(n, n - 1) = v;
  }
  return {std::move(a), std::move(ad)};
}

OperatorMatrix build_position(int truncation, const DeformationParams& p) {
  require_dim(truncation, 1, "build_position");
  auto x = zero_matrix(truncation, OperatorLabel::Position);
  for (int n = 0; n + 1 < truncation; ++n) {
    const double v = p.quad_scale * std::sqrt(q_number(n + 1, p));
    x.at(n, n + 1) = v;
    x.at(n + 1, n) = v;
  }
  return x;
}

OperatorMatrix build_momentum(int truncation, const DeformationParams& p) {
  require_dim(truncation, 1, "build_momentum");
  auto m = zero_matrix(truncation, OperatorLabel::Momentum);
  for (int n = 0; n + 1 < truncation; ++n) {
    const double v = p.quad_scale * std::sqrt(q_number(n + 1, p));
    m.at(n, n + 1) = std::complex<double>{0.0, -v};
    m.at(n + 1, n) = std::complex<double>{0.0, v};
  }
  return m;
}

OperatorMatrix build_quadrature(int truncation, const DeformationParams& p,
                                double theta) {
  require_dim(truncation, 1, "build_quadrature");
  const double phi = detail::wrap_theta(theta);
  auto x = zero_matrix(truncation, OperatorLabel::Quadrature);
  x.theta = phi;
  const std::complex<double> lower{std::cos(phi), std::sin(phi)};  // e^{+i phi}
  for (int n = 0; n + 1 < truncation; ++n) {
    const double v = p.quad_scale * std::sqrt(q_number(n + 1, p));
    x.at(n, n + 1) = v * std::conj(lower);
    x.at(n + 1, n) = v * lower;
  }
  return x;
}

double algebra_residual(int truncation, const DeformationParams& p) {
  require_dim(truncation, 2, "algebra_residual");
  auto [a, ad] = build_ladder(truncation, p);
  const auto aad = detail::multiply(a, ad);
  const auto ada = detail::multiply(ad, a);
  double worst = 0.0;
  for (int i = 0; i < truncation; ++i) {
    for (int j = 0; j < truncation; ++j) {
      if (i == truncation - 1 && j == truncation - 1) continue;  // truncation artifact
      std::complex<double> r = aad.at(i, j) - p.q_sq * ada.at(i, j);
      if (i == j) r -= 1.0;
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

double commutator_residual(int truncation, const DeformationParams& p) {
  require_dim(truncation, 4, "commutator_residual");
  const auto x = build_position(truncation, p);
  const auto mom = build_momentum(truncation, p);
  const auto xp = detail::multiply(x, mom);
  const auto px = detail::multiply(mom, x);
  const auto xx = detail::multiply(x, x);
  const auto pp = detail::multiply(mom, mom);
  const double coef = (p.q_sq - 1.0) / (p.q_sq + 1.0);
  const std::complex<double> iunit{0.0, 1.0};
  double worst = 0.0;
  for (int i = 0; i < truncation - 2; ++i) {
    for (int j = 0; j < truncation - 2; ++j) {
      std::complex<double> rhs = coef * (xx.at(i, j) + pp.at(i, j));
      if (i == j) rhs += 1.0;
      const std::complex<double> r = (xp.at(i, j) - px.at(i, j)) - iunit * rhs;
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

}  // namespace qtomo
