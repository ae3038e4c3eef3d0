#include "qtomo/tomogram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qtomo/eig.hpp"
#include "qtomo/operators.hpp"
#include "qtomo/polynomials.hpp"

namespace qtomo {

QCoherentState make_coherent(std::complex<double> alpha, const DeformationParams& p,
                             int truncation, double tol) {
  if (truncation < 1) throw std::invalid_argument("make_coherent: truncation must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("make_coherent: tol must be positive");
  const double z = std::norm(alpha);
  if (z >= p.conv_radius) {
    throw OutsideConvergenceDisk(
        "make_coherent: |alpha|^2 = " + std::to_string(z) +
        " lies outside the convergence disk |alpha|^2 < 1/(1-q^2) = " +
        std::to_string(p.conv_radius));
  }

  QCoherentState st;
  st.alpha = alpha;
  st.q = p.q;
  st.coeffs.resize(static_cast<size_t>(truncation));
  const double e_q = q_exponential(z, p, std::min(tol, 1e-12));
  st.coeffs[0] = 1.0 / std::sqrt(e_q);
  for (int n = 1; n < truncation; ++n) {
    st.coeffs[n] = st.coeffs[n - 1] * alpha / std::sqrt(q_number(n, p));
  }

  // |c_{n+1}|^2 / |c_n|^2 = z/[n+1] <= z/[N+1] for n >= N, so the true tail is
  // below |c_N|^2 / (1 - z/[N+1]).
  const double c_last_sq = std::norm(st.coeffs[static_cast<size_t>(truncation) - 1]);
  const double c_next_sq = c_last_sq * z / q_number(truncation, p);
  const double ratio = z / q_number(truncation + 1, p);
  if (ratio >= 1.0) {
    throw TruncationTooSmall("make_coherent: truncation " + std::to_string(truncation) +
                             " is below the coefficient growth range for |alpha|^2 = " +
                             std::to_string(z));
  }
  st.tail_bound = c_next_sq / (1.0 - ratio);
  if (st.tail_bound > tol) {
    throw TruncationTooSmall("make_coherent: certified tail bound " +
                             std::to_string(st.tail_bound) + " exceeds tolerance " +
                             std::to_string(tol) + "; increase the truncation");
  }
  return st;
}

double gaussian_oracle(std::complex<double> alpha, double theta, double x) {
  const double u = (alpha * std::complex<double>{std::cos(theta), -std::sin(theta)}).real();
  const double d = x - std::numbers::sqrt2 * u;
  return std::exp(-d * d) / std::sqrt(std::numbers::pi);
}

namespace {

std::vector<std::complex<double>> phase_table(int n_max, double theta) {
  std::vector<std::complex<double>> ph(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    ph[n] = std::complex<double>{std::cos(n * theta), -std::sin(n * theta)};
  }
  return ph;
}

// One theta row of a coherent tomogram from a precomputed polynomial table.
void coherent_row(std::span<const std::complex<double>> coeffs,
                  std::span<const std::complex<double>> phases,
                  const std::vector<double>& table, const SpectralMeasure& m,
                  double* out) {
  const size_t stride = coeffs.size();
  for (int k = 0; k < m.truncation; ++k) {
    const double* j = &table[stride * static_cast<size_t>(k)];
    std::complex<double> s{0.0, 0.0};
    for (size_t n = 0; n < coeffs.size(); ++n) s += coeffs[n] * phases[n] * j[n];
    out[k] = m.weights[k] * std::norm(s);
  }
}

void check_measure(const QCoherentState& state, const SpectralMeasure& m) {
  if (state.q != m.q) {
    throw MeasureMismatch("coherent state built at q = " + std::to_string(state.q) +
                          " but measure at q = " + std::to_string(m.q));
  }
  if (static_cast<int>(state.coeffs.size()) > m.truncation) {
    throw MeasureMismatch("coherent state carries " + std::to_string(state.coeffs.size()) +
                          " coefficients but the measure truncation is " +
                          std::to_string(m.truncation));
  }
}

TomogramGrid empty_grid(std::span<const double> thetas, const SpectralMeasure& m) {
  TomogramGrid g;
  g.theta_values.assign(thetas.begin(), thetas.end());
  g.nodes = m.nodes;
  g.weights = m.weights;
  g.probabilities.resize(thetas.size() * static_cast<size_t>(m.truncation));
  g.densities.resize(g.probabilities.size());
  return g;
}

void fill_densities(TomogramGrid& g, const SpectralMeasure& m) {
  const auto delta = node_spacings(m);
  const size_t n = static_cast<size_t>(m.truncation);
  for (size_t t = 0; t < g.theta_values.size(); ++t) {
    for (size_t k = 0; k < n; ++k) {
      g.densities[t * n + k] = g.probabilities[t * n + k] / delta[k];
    }
  }
}

}  // namespace

std::vector<double> tomogram_fock(int n, double theta, const SpectralMeasure& m) {
  if (n < 0 || n >= m.truncation) {
    throw IndexOutOfTruncation("tomogram_fock: Fock index " + std::to_string(n) +
                               " not below truncation " + std::to_string(m.truncation));
  }
  (void)theta;  // |e^{-i n theta}| = 1: the mass is phase independent
  const auto table = j_node_table(m, n);
  const size_t stride = static_cast<size_t>(n) + 1;
  std::vector<double> p(static_cast<size_t>(m.truncation));
  for (int k = 0; k < m.truncation; ++k) {
    const double j = table[stride * static_cast<size_t>(k) + static_cast<size_t>(n)];
    p[k] = j * j * m.weights[k];
  }
  return p;
}

std::vector<double> tomogram_coherent(const QCoherentState& state, double theta,
                                      const SpectralMeasure& m) {
  check_measure(state, m);
  const int n_max = static_cast<int>(state.coeffs.size()) - 1;
  const auto table = j_node_table(m, n_max);
  const auto phases = phase_table(n_max, theta);
  std::vector<double> p(static_cast<size_t>(m.truncation));
  coherent_row(state.coeffs, phases, table, m, p.data());
  return p;
}

TomogramGrid coherent_grid(const QCoherentState& state, std::span<const double> thetas,
                           const SpectralMeasure& m) {
  check_measure(state, m);
  const int n_max = static_cast<int>(state.coeffs.size()) - 1;
  const auto table = j_node_table(m, n_max);
  auto g = empty_grid(thetas, m);
  const int rows = static_cast<int>(thetas.size());
#pragma omp parallel for schedule(static)
  for (int t = 0; t < rows; ++t) {
    const auto phases = phase_table(n_max, thetas[t]);
    coherent_row(state.coeffs, phases, table, m,
                 &g.probabilities[static_cast<size_t>(t) * m.truncation]);
  }
  fill_densities(g, m);
  return g;
}

TomogramGrid fock_grid(int n, std::span<const double> thetas, const SpectralMeasure& m) {
  auto g = empty_grid(thetas, m);
  const auto row = tomogram_fock(n, thetas.empty() ? 0.0 : thetas[0], m);
  for (size_t t = 0; t < thetas.size(); ++t) {
    std::copy(row.begin(), row.end(),
              g.probabilities.begin() + static_cast<ptrdiff_t>(t * row.size()));
  }
  fill_densities(g, m);
  return g;
}

namespace reference {

TomogramGrid coherent_grid(const QCoherentState& state, std::span<const double> thetas,
                           const SpectralMeasure& m) {
  check_measure(state, m);
  const DeformationParams p(state.q);
  const int n_max = static_cast<int>(state.coeffs.size()) - 1;
  auto g = empty_grid(thetas, m);
  const size_t n = static_cast<size_t>(m.truncation);
  for (size_t t = 0; t < thetas.size(); ++t) {
    for (int k = 0; k < m.truncation; ++k) {
      const auto seq = eval_J(n_max, p, m.nodes[k]);
      std::complex<double> s{0.0, 0.0};
      for (int j = 0; j <= n_max; ++j) {
        s += state.coeffs[j] * seq.values[j] *
             std::complex<double>{std::cos(j * thetas[t]), -std::sin(j * thetas[t])};
      }
      g.probabilities[t * n + static_cast<size_t>(k)] = m.weights[k] * std::norm(s);
    }
  }
  fill_densities(g, m);
  return g;
}

std::vector<double> tomogram_dense(std::span<const std::complex<double>> fock_coeffs,
                                   const DeformationParams& p, double theta) {
  const int n = static_cast<int>(fock_coeffs.size());
  const auto x = build_quadrature(n, p, theta);
  const auto eig = hermitian_eig(x.entries, n);
  std::vector<double> out(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::complex<double> amp{0.0, 0.0};
    for (int row = 0; row < n; ++row) {
      amp += std::conj(eig.vectors[static_cast<size_t>(row) * n + k]) * fock_coeffs[row];
    }
    out[k] = std::norm(amp);
  }
  return out;
}

}  // namespace reference

}  // namespace qtomo
