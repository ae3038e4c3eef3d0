#include "qtomo/measure.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qtomo/eig.hpp"
#include "qtomo/operators.hpp"
#include "qtomo/polynomials.hpp"

namespace qtomo {

SpectralMeasure compute_measure(int truncation, const DeformationParams& p) {
  if (truncation < 1) throw std::invalid_argument("compute_measure: truncation must be >= 1");
  std::vector<double> diag(static_cast<size_t>(truncation), 0.0);
  std::vector<double> off(static_cast<size_t>(truncation) - 1);
  for (int n = 0; n + 1 < truncation; ++n) {
    off[static_cast<size_t>(n)] = p.quad_scale * std::sqrt(q_number(n + 1, p));
  }
  auto eig = symmetric_tridiagonal_eig(std::move(diag), std::move(off));

  SpectralMeasure m;
  m.truncation = truncation;
  m.q = p.q;
  m.nodes = std::move(eig.eigenvalues);
  m.weights.resize(static_cast<size_t>(truncation));
  for (int k = 0; k < truncation; ++k) {
    m.weights[k] = eig.first_components[k] * eig.first_components[k];
  }
  return m;
}

DiscreteWavefunction eval_psi(int n, double theta, const SpectralMeasure& m) {
  if (n < 0 || n >= m.truncation) {
    throw IndexOutOfTruncation("eval_psi: Fock index " + std::to_string(n) +
                               " not below truncation " + std::to_string(m.truncation));
  }
  const DeformationParams p(m.q);
  const auto sq = detail::sqrt_q_numbers(n, p);
  const double t_factor = 2.0 / std::sqrt(1.0 + p.q_sq);
  const std::complex<double> phase{std::cos(n * theta), -std::sin(n * theta)};

  DiscreteWavefunction psi;
  psi.n = n;
  psi.theta = theta;
  psi.values.resize(static_cast<size_t>(m.truncation));
  std::vector<double> j(static_cast<size_t>(n) + 1);
  for (int k = 0; k < m.truncation; ++k) {
    detail::eval_J_inplace(j, sq, t_factor, m.nodes[k]);
    psi.values[k] = j[static_cast<size_t>(n)] * std::sqrt(m.weights[k]) * phase;
  }
  return psi;
}

std::vector<double> j_node_table(const SpectralMeasure& m, int n_max) {
  if (n_max < 0) throw std::invalid_argument("j_node_table: n_max must be nonnegative");
  const DeformationParams p(m.q);
  const auto sq = detail::sqrt_q_numbers(n_max, p);
  const double t_factor = 2.0 / std::sqrt(1.0 + p.q_sq);
  const size_t stride = static_cast<size_t>(n_max) + 1;
  std::vector<double> table(stride * static_cast<size_t>(m.truncation));
  bool overflow = false;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < m.truncation; ++k) {
    try {
      detail::eval_J_inplace({&table[stride * static_cast<size_t>(k)], stride}, sq,
                             t_factor, m.nodes[k]);
    } catch (const OverflowError&) {
#pragma omp atomic write
      overflow = true;
    }
  }
  if (overflow) {
    throw OverflowError("j_node_table: polynomial overflow at a quadrature node");
  }
  return table;
}

std::vector<double> node_spacings(const SpectralMeasure& m) {
  const int n = m.truncation;
  std::vector<double> d(static_cast<size_t>(n), 1.0);
  if (n == 1) return d;
  d[0] = m.nodes[1] - m.nodes[0];
  for (int k = 1; k + 1 < n; ++k) d[k] = 0.5 * (m.nodes[k + 1] - m.nodes[k - 1]);
  d[static_cast<size_t>(n) - 1] = m.nodes[n - 1] - m.nodes[n - 2];
  return d;
}

double orthonormality_residual(const SpectralMeasure& m, int n_max) {
  if (n_max < 0 || n_max >= m.truncation) {
    throw std::invalid_argument("orthonormality_residual: need 0 <= n_max < truncation");
  }
  const auto table = j_node_table(m, n_max);
  const size_t stride = static_cast<size_t>(n_max) + 1;
  double worst = 0.0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : worst)
  for (int a = 0; a <= n_max; ++a) {
    for (int b = 0; b <= n_max; ++b) {
      double s = 0.0;
      for (int k = 0; k < m.truncation; ++k) {
        s += table[stride * k + a] * table[stride * k + b] * m.weights[k];
      }
      if (a == b) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

namespace {

// psi_a[k] = J_a(x_k) e^{-i a theta} sqrt(w_k), rows a, columns k.
std::vector<std::complex<double>> psi_matrix(const SpectralMeasure& m, double theta) {
  const int n = m.truncation;
  const auto table = j_node_table(m, n - 1);
  const size_t stride = static_cast<size_t>(n);
  std::vector<std::complex<double>> psi(stride * stride);
  for (int a = 0; a < n; ++a) {
    const std::complex<double> phase{std::cos(a * theta), -std::sin(a * theta)};
    for (int k = 0; k < n; ++k) {
      psi[static_cast<size_t>(a) * stride + k] =
          table[stride * k + a] * std::sqrt(m.weights[k]) * phase;
    }
  }
  return psi;
}

double unitarity_defect_row(const std::vector<std::complex<double>>& psi, int n,
                            int i, int j, bool rows) {
  std::complex<double> s{0.0, 0.0};
  if (rows) {  // (Psi Psi^H)_{ij}
    for (int k = 0; k < n; ++k) {
      s += psi[static_cast<size_t>(i) * n + k] * std::conj(psi[static_cast<size_t>(j) * n + k]);
    }
  } else {  // (Psi^H Psi)_{ij}
    for (int a = 0; a < n; ++a) {
      s += std::conj(psi[static_cast<size_t>(a) * n + i]) * psi[static_cast<size_t>(a) * n + j];
    }
  }
  if (i == j) s -= 1.0;
  return std::abs(s);
}

}  // namespace

double completeness_residual(const SpectralMeasure& m, double theta) {
  const int n = m.truncation;
  const auto psi = psi_matrix(m, theta);
  double worst = 0.0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : worst)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double r = unitarity_defect_row(psi, n, i, j, true);
      const double c = unitarity_defect_row(psi, n, i, j, false);
      worst = std::max(worst, std::max(r, c));
    }
  }
  return worst;
}

namespace reference {

double completeness_residual(const SpectralMeasure& m, double theta) {
  const int n = m.truncation;
  const auto psi = psi_matrix(m, theta);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double r = unitarity_defect_row(psi, n, i, j, true);
      const double c = unitarity_defect_row(psi, n, i, j, false);
      worst = std::max(worst, std::max(r, c));
    }
  }
  return worst;
}

}  // namespace reference

double eigenrelation_residual(const SpectralMeasure& m, double theta) {
  const int n = m.truncation;
  const DeformationParams p(m.q);
  const auto x = build_quadrature(n, p, theta);
  const auto psi = psi_matrix(m, theta);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int row = 0; row + 1 < n; ++row) {  // last row is the truncation boundary
      std::complex<double> s{0.0, 0.0};
      for (int col = 0; col < n; ++col) {
        s += x.at(row, col) * std::conj(psi[static_cast<size_t>(col) * n + k]);
      }
      s -= m.nodes[k] * std::conj(psi[static_cast<size_t>(row) * n + k]);
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

void write_measure_csv(const SpectralMeasure& m, std::ostream& os) {
  os << "k,x,w\n";
  char buf[128];
  for (int k = 0; k < m.truncation; ++k) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", k, m.nodes[k], m.weights[k]);
    os << buf;
  }
}

}  // namespace qtomo
