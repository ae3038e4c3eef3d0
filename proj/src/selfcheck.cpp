#include "qtomo/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>

#include "qtomo/deformation.hpp"
#include "qtomo/eig.hpp"
#include "qtomo/measure.hpp"
#include "qtomo/operators.hpp"
#include "qtomo/polynomials.hpp"
#include "qtomo/tomogram.hpp"

namespace qtomo {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

double max_abs_entry(const OperatorMatrix& a, const OperatorMatrix& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
  }
  return worst;
}

// e^{i n theta} to ~1 ulp absolute. A plain cos(n*theta) loses ~n*eps to the
// argument rounding, which would dominate the 1e-14 covariance tolerance at
// n ~ 128; splitting theta makes n*hi exact (n < 2^26).
cd unit_phase(int n, double theta) {
  const double split = theta * 134217729.0;  // 2^27 + 1, Veltkamp
  const double hi = split - (split - theta);
  const double lo = theta - hi;
  const double a = n * hi;
  const double b = n * lo;
  return cd{std::cos(a), std::sin(a)} * cd{std::cos(b), std::sin(b)};
}

// Sum of the q-exponential series with the production stopping rule, then
// the change caused by ten further terms.
double qexp_extension_gain(double z, const DeformationParams& p, double tol) {
  double sum = 1.0;
  double term = 1.0;
  int n = 1;
  for (; n < 1'000'000; ++n) {
    term *= z / q_number(n, p);
    sum += term;
    const double r = z / q_number(n + 1, p);
    if (r < 1.0 && term * r / (1.0 - r) < tol) break;
  }
  const double stopped = sum;
  for (int extra = 0; extra < 10; ++extra) {
    ++n;
    term *= z / q_number(n, p);
    sum += term;
  }
  return sum - stopped;
}

struct Battery {
  CheckReport report;

  void add(std::string name, double residual, double threshold) {
    report.items.push_back(
        {std::move(name), residual, threshold, residual <= threshold});
  }

  void add_guarded(std::string name, double threshold,
                   const std::function<double()>& fn) {
    double residual;
    try {
      residual = fn();
    } catch (const std::exception&) {
      residual = std::numeric_limits<double>::infinity();
    }
    add(std::move(name), residual, threshold);
  }
};

}  // namespace

bool CheckReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& it) { return it.pass; });
}

CheckReport run_self_check(double q, int truncation) {
  const DeformationParams p(q);
  const int n_ops = std::clamp(truncation, 8, 128);
  // Above N ~ 300 the extreme spectral-tail weights of near-classical q can
  // underflow double precision, so the battery caps its own truncation.
  const int n_meas = std::clamp(truncation, 8, 256);
  const int n_tom = std::min(n_meas, 128);

  Battery b;

  // --- scalar q-arithmetic ---------------------------------------------
  b.add_guarded("qnumber.saturation(q=0.5,n=200)", 1e-10, [] {
    const DeformationParams half(0.5);
    return std::abs(half.conv_radius - q_number(200, half));
  });
  b.add_guarded("qnumber.monotone-bounded", 0.0, [&] {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
      worst = std::max(worst, q_number(n, p) - q_number(n + 1, p));
    }
    for (int n = 0; n <= 300; ++n) {
      worst = std::max(worst, q_number(n, p) - p.conv_radius);
    }
    return worst;
  });
  b.add_guarded("qnumber.classical-limit(q=1-1e-6,n<=10)", 1e-4, [] {
    const DeformationParams near_one(1.0 - 1e-6);
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      worst = std::max(worst, std::abs(q_number(n, near_one) - n));
    }
    return worst;
  });
  b.add_guarded("qexp.tail-soundness", 1e-12, [&] {
    if (p.classical()) return std::abs(q_exponential(1.0, p) - std::exp(1.0));
    // capped so E_q stays representable as q -> 1
    return qexp_extension_gain(std::min(0.9 * p.conv_radius, 300.0), p, 1e-12);
  });
  b.add_guarded("qexp.value(z=1,q=0.5)", 1e-9, [] {
    return std::abs(q_exponential(1.0, DeformationParams(0.5)) - 5.246922619400047);
  });
  b.add_guarded("qexp.divergence-guard", 0.0, [] {
    const DeformationParams half(0.5);
    try {
      q_exponential(half.conv_radius, half);
    } catch (const DivergentSeries&) {
      return 0.0;
    }
    return 1.0;
  });

  // --- operator identities ---------------------------------------------
  b.add_guarded("operators.hermiticity(theta=1.1)", 0.0, [&] {
    const auto x = build_quadrature(n_ops, p, 1.1);
    double worst = 0.0;
    for (int i = 0; i < n_ops; ++i) {
      for (int j = 0; j < n_ops; ++j) {
        worst = std::max(worst, std::abs(x.at(i, j) - std::conj(x.at(j, i))));
      }
    }
    return worst;
  });
  b.add_guarded("operators.theta-covariance(theta=1.1)", 1e-14, [&] {
    const double theta = 1.1;
    const auto xt = build_quadrature(n_ops, p, theta);
    const auto x0 = build_quadrature(n_ops, p, 0.0);
    double worst = 0.0;
    for (int i = 0; i < n_ops; ++i) {
      for (int j = 0; j < n_ops; ++j) {
        const cd u_i = unit_phase(i, theta);
        const cd u_j = std::conj(unit_phase(j, theta));
        worst = std::max(worst, std::abs(xt.at(i, j) - u_i * x0.at(i, j) * u_j));
      }
    }
    return worst;
  });
  b.add_guarded("operators.quadrature-at-0-and-half-pi", 1e-13, [&] {
    const auto x0 = build_quadrature(n_ops, p, 0.0);
    const auto xh = build_quadrature(n_ops, p, pi / 2.0);
    return std::max(max_abs_entry(x0, build_position(n_ops, p)),
                    max_abs_entry(xh, build_momentum(n_ops, p)));
  });
  b.add_guarded("operators.algebra-residual", 1e-12,
                [&] { return algebra_residual(n_ops, p); });
  b.add_guarded("operators.commutator-residual", 1e-12,
                [&] { return commutator_residual(n_ops, p); });

  const auto measure = compute_measure(n_meas, p);

  b.add_guarded("operators.spectral-bound", 0.0, [&] {
    if (p.classical()) return 0.0;
    const double bound = std::sqrt(1.0 + p.q_sq) / std::sqrt(1.0 - p.q_sq);
    double worst = 0.0;
    for (double x : measure.nodes) worst = std::max(worst, std::abs(x) - bound);
    return worst;
  });

  // --- polynomial family -------------------------------------------------
  b.add_guarded("poly.recurrence-residual", 1e-10, [&] {
    const int n_max = std::min(64, n_meas - 1);
    const double t_factor = 2.0 / std::sqrt(1.0 + p.q_sq);
    double worst = 0.0;
    for (int k = 0; k < measure.truncation; k += std::max(1, measure.truncation / 16)) {
      const double x = measure.nodes[k];
      const auto seq = eval_J(n_max, p, x);
      for (int n = 1; n < n_max; ++n) {
        const double lhs = std::sqrt(q_number(n + 1, p)) * seq.values[n + 1] -
                           t_factor * x * seq.values[n] +
                           std::sqrt(q_number(n, p)) * seq.values[n - 1];
        worst = std::max(worst, std::abs(lhs) / std::max(1.0, std::abs(seq.values[n])));
      }
    }
    return worst;
  });
  b.add_guarded("poly.parity", 1e-12, [&] {
    double worst = 0.0;
    for (double x : {0.31, 0.77, 1.13}) {
      const auto plus = eval_J(64, p, x);
      const auto minus = eval_J(64, p, -x);
      for (int n = 0; n <= 64; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const double denom = std::max(std::abs(plus.values[n]), 1e-300);
        worst = std::max(worst, std::abs(minus.values[n] - sign * plus.values[n]) / denom);
      }
    }
    return worst;
  });
  b.add_guarded("poly.hermite-exact(q=1,n<=10,|x|<=3)", 1e-12, [] {
    const DeformationParams one(1.0);
    const auto m = compute_measure(64, one);
    double worst = 0.0;
    for (double x : m.nodes) {
      if (std::abs(x) > 3.0) continue;
      const auto j = eval_J(10, one, x);
      const auto h = hermite_reference(10, x);
      for (int n = 0; n <= 10; ++n) worst = std::max(worst, std::abs(j.values[n] - h[n]));
    }
    return worst;
  });
  // The family converges to the normalized Hermite polynomials at rate
  // O(1-q^2) with constant ~4e2 over n <= 10, |x| <= 3, so a tight absolute
  // comparison is only meaningful very close to q = 1.
  b.add_guarded("poly.hermite-convergence(q=1-1e-6,n<=10,|x|<=3)", 2e-3, [] {
    const DeformationParams near_one(1.0 - 1e-6);
    const auto m = compute_measure(64, near_one);
    double worst = 0.0;
    for (double x : m.nodes) {
      if (std::abs(x) > 3.0) continue;
      const auto j = eval_J(10, near_one, x);
      const auto h = hermite_reference(10, x);
      for (int n = 0; n <= 10; ++n) worst = std::max(worst, std::abs(j.values[n] - h[n]));
    }
    return worst;
  });
  b.add_guarded("poly.leading-coefficient", 1e-6, [&] {
    double worst = 0.0;
    for (const auto& [x, n_top] : {std::pair{1e3, 2}, std::pair{1e4, 8}}) {
      const auto j = eval_J(n_top, p, x);
      double lead = 1.0;
      for (int n = 1; n <= n_top; ++n) {
        lead *= (2.0 / std::sqrt(1.0 + p.q_sq)) / std::sqrt(q_number(n, p));
        const double expected = lead;
        const double got = j.values[n] / std::pow(x, n);
        worst = std::max(worst, std::abs(got - expected) / expected);
      }
    }
    return worst;
  });
  b.add_guarded("poly.overflow-guard", 0.0, [&] {
    try {
      eval_J(200, p, 1e3);
    } catch (const OverflowError&) {
      return 0.0;
    }
    return 1.0;
  });

  // --- spectral measure ---------------------------------------------------
  b.add_guarded("measure.weight-sum", 1e-12, [&] {
    double s = 0.0;
    for (double w : measure.weights) s += w;
    return std::abs(s - 1.0);
  });
  b.add_guarded("measure.node-symmetry", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < n_meas; ++k) {
      worst = std::max(worst, std::abs(measure.nodes[k] + measure.nodes[n_meas - 1 - k]));
    }
    return worst;
  });
  b.add_guarded("measure.weight-symmetry", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < n_meas; ++k) {
      worst = std::max(worst, std::abs(measure.weights[k] - measure.weights[n_meas - 1 - k]));
    }
    return worst;
  });
  b.add_guarded("measure.weights-positive", 0.0, [&] {
    return *std::min_element(measure.weights.begin(), measure.weights.end()) > 0.0 ? 0.0
                                                                                   : 1.0;
  });
  b.add_guarded("measure.gauss-hermite-5(q=1)", 1e-10, [] {
    const auto m = compute_measure(5, DeformationParams(1.0));
    const double s10 = std::sqrt(10.0);
    const double inner = std::sqrt((5.0 - s10) / 2.0);
    const double outer = std::sqrt((5.0 + s10) / 2.0);
    const double nodes[5] = {-outer, -inner, 0.0, inner, outer};
    const double w_out = 0.3 / (14.0 + 4.0 * s10);
    const double w_in = 0.3 / (14.0 - 4.0 * s10);
    const double weights[5] = {w_out, w_in, 8.0 / 15.0, w_in, w_out};
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      worst = std::max(worst, std::abs(m.nodes[k] - nodes[k]));
      worst = std::max(worst, std::abs(m.weights[k] - weights[k]));
    }
    return worst;
  });
  b.add_guarded("measure.orthonormality(n_max=20)", 1e-10, [&] {
    return orthonormality_residual(measure, std::min(20, n_meas - 1));
  });
  b.add_guarded("measure.completeness(theta=0,1.1,pi/2)", 1e-10, [&] {
    const auto m = (n_meas == n_tom) ? measure : compute_measure(n_tom, p);
    double worst = 0.0;
    for (double theta : {0.0, 1.1, pi / 2.0}) {
      worst = std::max(worst, completeness_residual(m, theta));
    }
    return worst;
  });
  b.add_guarded("measure.theta-independence(N=16,theta=1.1)", 1e-12, [&] {
    const auto m16 = compute_measure(16, p);
    const auto x = build_quadrature(16, p, 1.1);
    const auto eig = hermitian_eig(x.entries, 16);
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
      worst = std::max(worst, std::abs(eig.eigenvalues[k] - m16.nodes[k]));
      const double w = std::norm(eig.vectors[static_cast<size_t>(0) * 16 + k]);
      worst = std::max(worst, std::abs(w - m16.weights[k]));
    }
    return worst;
  });
  b.add_guarded("measure.eigenrelation(theta=1.1)", 1e-10, [&] {
    const auto m = (n_meas == n_tom) ? measure : compute_measure(n_tom, p);
    return eigenrelation_residual(m, 1.1);
  });
  b.add_guarded("wavefunction.unit-norm", 1e-10, [&] {
    double worst = 0.0;
    for (int n : {0, 1, n_meas / 2, n_meas - 1}) {
      const auto psi = eval_psi(n, 0.7, measure);
      double s = 0.0;
      for (const auto& v : psi.values) s += std::norm(v);
      worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
  });
  b.add_guarded("wavefunction.phase-periodicity", 1e-12, [&] {
    const double theta = 1.3;
    const auto a = eval_psi(3, theta, measure);
    const auto c = eval_psi(3, theta + 2.0 * pi, measure);
    double worst = 0.0;
    for (size_t k = 0; k < a.values.size(); ++k) {
      worst = std::max(worst, std::abs(a.values[k] - c.values[k]));
    }
    return worst;
  });

  // --- tomograms -----------------------------------------------------------
  const auto m_tom = (n_meas == n_tom) ? measure : compute_measure(n_tom, p);

  b.add_guarded("tomogram.fock-normalization", 1e-10, [&] {
    double worst = 0.0;
    for (int n : {0, 1, n_tom - 1}) {
      const auto t = tomogram_fock(n, 0.7, m_tom);
      double s = 0.0;
      for (double v : t) s += v;
      worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
  });
  b.add_guarded("tomogram.fock-two-level(N=2,q=0.5)", 1e-12, [] {
    const DeformationParams half(0.5);
    const auto m = compute_measure(2, half);
    const auto t = tomogram_fock(1, 1.3, m);
    return std::max(std::abs(t[0] - 0.5), std::abs(t[1] - 0.5));
  });
  b.add_guarded("tomogram.coherent-normalization(alpha=0.9)", 1e-12, [&] {
    const auto st = make_coherent(0.9, p, n_tom, 1.0);
    const auto t = tomogram_coherent(st, 0.7, m_tom);
    double s = 0.0;
    for (double v : t) s += v;
    const double deficit = 1.0 - s;
    return std::max({0.0, deficit - st.tail_bound, -deficit});
  });
  b.add_guarded("tomogram.coherent-deficit-monotone(q=0.5)", 1e-12, [] {
    const DeformationParams half(0.5);
    double prev = std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (int n : {16, 32, 64}) {
      const auto m = compute_measure(n, half);
      const auto st = make_coherent(0.9, half, n, 1.0);
      const auto t = tomogram_coherent(st, 0.4, m);
      double s = 0.0;
      for (double v : t) s += v;
      const double deficit = 1.0 - s;
      worst = std::max(worst, deficit - prev);
      prev = deficit;
    }
    return worst;
  });
  b.add_guarded("tomogram.theta-periodicity", 1e-12, [&] {
    const auto st = make_coherent(cd{0.4, 0.1}, p, n_tom, 1.0);
    const double theta = 1.3;
    const auto a = tomogram_coherent(st, theta, m_tom);
    const auto c = tomogram_coherent(st, theta + 2.0 * pi, m_tom);
    double worst = 0.0;
    for (size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - c[k]));
    return worst;
  });
  b.add_guarded("tomogram.theta-reflection(real-alpha)", 1e-12, [&] {
    const auto st = make_coherent(0.6, p, n_tom, 1.0);
    const auto a = tomogram_coherent(st, 0.9, m_tom);
    const auto c = tomogram_coherent(st, -0.9, m_tom);
    double worst = 0.0;
    for (size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - c[k]));
    return worst;
  });
  b.add_guarded("tomogram.mirror-parity(theta=pi/2,real-alpha)", 1e-10, [&] {
    const auto st = make_coherent(0.5, p, n_tom, 1.0);
    const auto t = tomogram_coherent(st, pi / 2.0, m_tom);
    double worst = 0.0;
    for (int k = 0; k < n_tom; ++k) {
      worst = std::max(worst, std::abs(t[k] - t[n_tom - 1 - k]));
    }
    return worst;
  });
  b.add_guarded("tomogram.classical-limit(q=1-1e-4,N=128)", 2e-2, [] {
    const DeformationParams near_one(1.0 - 1e-4);
    const auto m = compute_measure(128, near_one);
    const auto delta = node_spacings(m);
    double worst = 0.0;
    for (const cd alpha : {cd{0.3, 0.0}, cd{0.8, 0.2}}) {
      const auto st = make_coherent(alpha, near_one, 128, 1.0);
      for (double theta : {0.0, pi / 4.0, pi / 2.0}) {
        const auto t = tomogram_coherent(st, theta, m);
        for (int k = 1; k + 1 < 128; ++k) {
          const double density = t[k] / delta[k];
          worst = std::max(worst, std::abs(density - gaussian_oracle(alpha, theta, m.nodes[k])));
        }
      }
    }
    return worst;
  });
  b.add_guarded("tomogram.brute-force(N<=6)", 1e-10, [] {
    double worst = 0.0;
    for (double qv : {0.5, 0.9}) {
      const DeformationParams pp(qv);
      for (int n = 2; n <= 6; ++n) {
        const auto m = compute_measure(n, pp);
        for (double theta : {0.0, 0.9}) {
          const auto st = make_coherent(cd{0.4, 0.3}, pp, n, 1.0);
          const auto fast = tomogram_coherent(st, theta, m);
          const auto dense = reference::tomogram_dense(st.coeffs, pp, theta);
          for (size_t k = 0; k < dense.size(); ++k) {
            worst = std::max(worst, std::abs(fast[k] - dense[k]));
          }
          // Fock state |1> through both routes.
          std::vector<cd> e1(static_cast<size_t>(n), cd{0.0, 0.0});
          e1[1] = 1.0;
          const auto fock_fast = tomogram_fock(1, theta, m);
          const auto fock_dense = reference::tomogram_dense(e1, pp, theta);
          for (size_t k = 0; k < fock_dense.size(); ++k) {
            worst = std::max(worst, std::abs(fock_fast[k] - fock_dense[k]));
          }
        }
      }
    }
    return worst;
  });
  b.add_guarded("grid.serial-parallel-agreement", 1e-13, [&] {
    const int n = std::min(n_tom, 64);
    const auto m = compute_measure(n, p);
    const auto st = make_coherent(cd{0.0, 0.33}, p, n, 1.0);
    std::vector<double> thetas(9);
    for (int t = 0; t < 9; ++t) thetas[t] = 2.0 * pi * t / 8.0;
    const auto par = coherent_grid(st, thetas, m);
    const auto ser = reference::coherent_grid(st, thetas, m);
    double worst = 0.0;
    for (size_t i = 0; i < par.probabilities.size(); ++i) {
      worst = std::max(worst, std::abs(par.probabilities[i] - ser.probabilities[i]));
    }
    return worst;
  });
  b.add_guarded("grid.determinism", 0.0, [&] {
    const int n = std::min(n_tom, 64);
    const auto m = compute_measure(n, p);
    const auto st = make_coherent(cd{0.2, 0.4}, p, n, 1.0);
    std::vector<double> thetas(7);
    for (int t = 0; t < 7; ++t) thetas[t] = 0.3 + 0.7 * t;
    const auto a = coherent_grid(st, thetas, m);
    const auto c = coherent_grid(st, thetas, m);
    return (a.probabilities == c.probabilities && a.densities == c.densities) ? 0.0 : 1.0;
  });
  b.add_guarded("gaussian.normalization", 1e-6, [] {
    const cd alpha{0.8, 0.2};
    const double theta = 0.6;
    const double center = std::numbers::sqrt2 * (alpha * cd{std::cos(theta), -std::sin(theta)}).real();
    const double lo = center - 8.0;
    const double hi = center + 8.0;
    const int steps = 2000;
    const double h = (hi - lo) / steps;
    double integral = 0.5 * (gaussian_oracle(alpha, theta, lo) + gaussian_oracle(alpha, theta, hi));
    for (int i = 1; i < steps; ++i) integral += gaussian_oracle(alpha, theta, lo + i * h);
    integral *= h;
    return std::abs(integral - 1.0);
  });

  return b.report;
}

void print_report(const CheckReport& report, std::ostream& os) {
  size_t width = 0;
  for (const auto& it : report.items) width = std::max(width, it.name.size());
  int index = 0;
  int failed = 0;
  char buf[256];
  for (const auto& it : report.items) {
    ++index;
    if (!it.pass) ++failed;
    std::snprintf(buf, sizeof buf, "[%2d/%2zu] %s  %-*s  residual %.3e  limit %.3e\n",
                  index, report.items.size(), it.pass ? "PASS" : "FAIL",
                  static_cast<int>(width), it.name.c_str(), it.residual, it.threshold);
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "%zu checks, %d failed\n", report.items.size(), failed);
  os << buf;
}

}  // namespace qtomo
