#include "qtomo/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtomo {

TridiagEig symmetric_tridiagonal_eig(std::vector<double> d, std::vector<double> e,
                                     int max_iter) {
  const int n = static_cast<int>(d.size());
  if (n < 1) throw std::invalid_argument("symmetric_tridiagonal_eig: empty matrix");
  if (static_cast<int>(e.size()) != n - 1) {
    throw std::invalid_argument("symmetric_tridiagonal_eig: offdiag must have n-1 entries");
  }
  e.push_back(0.0);

  std::vector<double> z(static_cast<size_t>(n), 0.0);
  z[0] = 1.0;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > max_iter) {
        throw EigensolveFailure("symmetric_tridiagonal_eig: no convergence after " +
                                std::to_string(max_iter) + " QL sweeps at index " +
                                std::to_string(l));
      }
      // Wilkinson shift from the leading 2x2.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {  // rotation annihilated; deflate and restart
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        // Apply the rotation to the tracked first row of the eigenvector matrix.
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  TridiagEig out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.first_components.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = d[order[k]];
    out.first_components[k] = z[order[k]];
  }
  return out;
}

namespace {

double offdiag_norm(const std::vector<std::complex<double>>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += std::norm(a[static_cast<size_t>(i) * n + j]);
  return std::sqrt(2.0 * s);
}

}  // namespace

HermitianEig hermitian_eig(std::vector<std::complex<double>> a, int n, int max_sweeps) {
  if (n < 1 || static_cast<size_t>(n) * n != a.size()) {
    throw std::invalid_argument("hermitian_eig: bad dimensions");
  }
  using cd = std::complex<double>;
  std::vector<cd> v(static_cast<size_t>(n) * n, cd{0.0, 0.0});
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

  double anorm = 0.0;
  for (const auto& x : a) anorm += std::norm(x);
  anorm = std::sqrt(anorm);
  const double stop = 1e-14 * std::max(anorm, std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a, n) > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cd w = a[static_cast<size_t>(p) * n + q];
        const double aw = std::abs(w);
        if (aw <= 1e-300) continue;
        const cd phase = w / aw;
        const double app = a[static_cast<size_t>(p) * n + p].real();
        const double aqq = a[static_cast<size_t>(q) * n + q].real();
        const double tau = (aqq - app) / (2.0 * aw);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cd sp = s * phase;        // rotates column q into column p
        const cd spc = s * std::conj(phase);

        // A <- A R  (columns p, q)
        for (int i = 0; i < n; ++i) {
          const cd colp = a[static_cast<size_t>(i) * n + p];
          const cd colq = a[static_cast<size_t>(i) * n + q];
          a[static_cast<size_t>(i) * n + p] = c * colp - spc * colq;
          a[static_cast<size_t>(i) * n + q] = sp * colp + c * colq;
        }
        // A <- R^H A  (rows p, q)
        for (int j = 0; j < n; ++j) {
          const cd rowp = a[static_cast<size_t>(p) * n + j];
          const cd rowq = a[static_cast<size_t>(q) * n + j];
          a[static_cast<size_t>(p) * n + j] = c * rowp - sp * rowq;
          a[static_cast<size_t>(q) * n + j] = spc * rowp + c * rowq;
        }
        // V <- V R
        for (int i = 0; i < n; ++i) {
          const cd colp = v[static_cast<size_t>(i) * n + p];
          const cd colq = v[static_cast<size_t>(i) * n + q];
          v[static_cast<size_t>(i) * n + p] = c * colp - spc * colq;
          v[static_cast<size_t>(i) * n + q] = sp * colp + c * colq;
        }
      }
    }
  }
  if (offdiag_norm(a, n) > stop) {
    throw EigensolveFailure("hermitian_eig: Jacobi sweeps did not converge");
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a[static_cast<size_t>(x) * n + x].real() < a[static_cast<size_t>(y) * n + y].real();
  });

  HermitianEig out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.vectors.resize(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a[static_cast<size_t>(order[k]) * n + order[k]].real();
    for (int i = 0; i < n; ++i) {
      out.vectors[static_cast<size_t>(i) * n + k] = v[static_cast<size_t>(i) * n + order[k]];
    }
  }
  return out;
}

}  // namespace qtomo
