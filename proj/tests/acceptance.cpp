// Acceptance suite: one function per criterion, one PASS/FAIL line each,
// exit status = number of failed criteria.
//
// Usage: qtomo_acceptance <path-to-cli> [criterion]

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qtomo/deformation.hpp"
#include "qtomo/measure.hpp"
#include "qtomo/operators.hpp"
#include "qtomo/polynomials.hpp"
#include "qtomo/tomogram.hpp"

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

std::string g_cli_path;

struct Outcome {
  bool pass;
  std::string detail;
};

double tomogram_sum(const std::vector<double>& t) {
  double s = 0.0;
  for (double v : t) s += v;
  return s;
}

// 1. A A^dag - q^2 A^dag A = 1 entrywise, off the truncation artifact.
Outcome criterion_1() {
  double worst = 0.0;
  for (int n : {8, 32, 128}) {
    for (double q : {0.3, 0.5, 0.9, 0.99}) {
      worst = std::max(worst, qtomo::algebra_residual(n, qtomo::DeformationParams(q)));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max residual %.3e (limit 1e-12)", worst);
  return {worst <= 1e-12, buf};
}

// 2. [X, P] = i(1 + (q^2-1)/(q^2+1)(X^2+P^2)) on the interior block; the
//    deformation term vanishes at q = 1.
Outcome criterion_2() {
  double worst = 0.0;
  for (int n : {8, 32, 128}) {
    for (double q : {0.3, 0.5, 0.9, 0.99, 1.0}) {
      worst = std::max(worst, qtomo::commutator_residual(n, qtomo::DeformationParams(q)));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max residual %.3e (limit 1e-12)", worst);
  return {worst <= 1e-12, buf};
}

// 3. Hermite limit of the polynomial family over n <= 10 at nodes |x| <= 3:
//    <= 1e-2 at q = 0.999 and <= 1e-12 at q = 1.
Outcome criterion_3() {
  auto sup_disc = [](double q) {
    const qtomo::DeformationParams p(q);
    const auto m = qtomo::compute_measure(64, p);
    double worst = 0.0;
    for (double x : m.nodes) {
      if (std::abs(x) > 3.0) continue;
      const auto j = qtomo::eval_J(10, p, x);
      const auto h = qtomo::hermite_reference(10, x);
      for (int n = 0; n <= 10; ++n) worst = std::max(worst, std::abs(j.values[n] - h[n]));
    }
    return worst;
  };
  const double exact = sup_disc(1.0);
  const double near = sup_disc(0.999);
  const bool pass = exact <= 1e-12 && near <= 1e-2;
  char buf[256];
  std::snprintf(buf, sizeof buf, "q=1: %.3e (limit 1e-12), q=0.999: %.3e (limit 1e-2)",
                exact, near);
  std::string detail = buf;
  if (near > 1e-2) {
    // Measured convergence: sup deviation ~ 4.2e2 * (1-q^2), i.e. ~1.1 at
    // q = 0.999; an absolute 1e-2 over n <= 10, |x| <= 3 first holds around
    // q = 1-1e-5. The limit itself is correct (see the q = 1 branch and the
    // envelope checks in the unit suite); the 1e-2 bound at q = 0.999 is not
    // attainable by any correct implementation of the recurrence.
    std::snprintf(buf, sizeof buf,
                  "; note: deviation scales as ~4.2e2*(1-q^2) = %.2e at q=0.999",
                  4.2e2 * (1.0 - 0.999 * 0.999));
    detail += buf;
  }
  return {pass, detail};
}

// 4. Measure correctness: classical 5-point Gauss-Hermite nodes; support
//    bound and orthonormality at q = 0.5, N = 64.
Outcome criterion_4() {
  const auto m5 = qtomo::compute_measure(5, qtomo::DeformationParams(1.0));
  const double s10 = std::sqrt(10.0);
  const double gh[5] = {-std::sqrt((5.0 + s10) / 2.0), -std::sqrt((5.0 - s10) / 2.0), 0.0,
                        std::sqrt((5.0 - s10) / 2.0), std::sqrt((5.0 + s10) / 2.0)};
  double node_err = 0.0;
  for (int k = 0; k < 5; ++k) node_err = std::max(node_err, std::abs(m5.nodes[k] - gh[k]));

  const auto m = qtomo::compute_measure(64, qtomo::DeformationParams(0.5));
  double support = 0.0;
  for (double x : m.nodes) support = std::max(support, std::abs(x));
  const double ortho = qtomo::orthonormality_residual(m, 20);

  const bool pass = node_err <= 1e-10 && support <= 1.290995 && ortho <= 1e-10;
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "gh5 node error %.3e (limit 1e-10), max|node| %.9f (limit 1.290995), "
                "orthonormality %.3e (limit 1e-10)",
                node_err, support, ortho);
  return {pass, buf};
}

// 5. Completeness: the psi matrix is unitary for N = 64, q in {0.5, 0.9}.
Outcome criterion_5() {
  double worst = 0.0;
  for (double q : {0.5, 0.9}) {
    const auto m = qtomo::compute_measure(64, qtomo::DeformationParams(q));
    for (double theta : {0.0, 1.1, pi / 2.0}) {
      worst = std::max(worst, qtomo::completeness_residual(m, theta));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max unitarity defect %.3e (limit 1e-10)", worst);
  return {worst <= 1e-10, buf};
}

// 6. Tomogram normalization: Fock sums to 1 +- 1e-10; coherent sums to
//    [1 - tail_bound, 1] with tail_bound < 1e-10 at q = 0.5, alpha = 0.9, N = 64.
Outcome criterion_6() {
  const qtomo::DeformationParams p(0.5);
  const auto m = qtomo::compute_measure(64, p);
  double fock_err = 0.0;
  for (int n : {0, 1, 32, 63}) {
    fock_err = std::max(fock_err, std::abs(tomogram_sum(qtomo::tomogram_fock(n, 0.7, m)) - 1.0));
  }
  const auto st = qtomo::make_coherent(0.9, p, 64, 1e-10);
  const double s = tomogram_sum(qtomo::tomogram_coherent(st, 0.7, m));
  const bool coherent_ok =
      st.tail_bound < 1e-10 && s >= 1.0 - st.tail_bound - 1e-12 && s <= 1.0 + 1e-12;
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "fock error %.3e (limit 1e-10), coherent sum-1 %.3e, tail bound %.3e "
                "(limit 1e-10)",
                fock_err, s - 1.0, st.tail_bound);
  return {fock_err <= 1e-10 && coherent_ok, buf};
}

// 7. Glauber limit: density estimate vs the classical Gaussian tomogram at
//    q = 1-1e-4, N = 128.
Outcome criterion_7() {
  const qtomo::DeformationParams p(1.0 - 1e-4);
  const auto m = qtomo::compute_measure(128, p);
  const auto delta = qtomo::node_spacings(m);
  double worst = 0.0;
  for (const cd alpha : {cd{0.3, 0.0}, cd{0.8, 0.2}}) {
    const auto st = qtomo::make_coherent(alpha, p, 128, 1.0);
    for (double theta : {0.0, pi / 4.0, pi / 2.0}) {
      const auto t = qtomo::tomogram_coherent(st, theta, m);
      for (int k = 1; k + 1 < 128; ++k) {
        worst = std::max(worst, std::abs(t[k] / delta[k] -
                                         qtomo::gaussian_oracle(alpha, theta, m.nodes[k])));
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "sup density distance %.3e (limit 2e-2)", worst);
  return {worst <= 2e-2, buf};
}

// 8. Brute-force equivalence: recurrence/measure pipeline vs dense
//    eigenvectors of the quadrature matrix for N <= 6.
Outcome criterion_8() {
  double worst = 0.0;
  for (double q : {0.5, 0.9}) {
    const qtomo::DeformationParams p(q);
    for (int n = 2; n <= 6; ++n) {
      const auto m = qtomo::compute_measure(n, p);
      for (double theta : {0.0, 0.9}) {
        const auto st = qtomo::make_coherent(cd{0.4, 0.3}, p, n, 1.0);
        const auto fast = qtomo::tomogram_coherent(st, theta, m);
        const auto dense = qtomo::reference::tomogram_dense(st.coeffs, p, theta);
        for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(fast[k] - dense[k]));

        std::vector<cd> e1(static_cast<size_t>(n), cd{0.0, 0.0});
        e1[1] = 1.0;
        const auto ff = qtomo::tomogram_fock(1, theta, m);
        const auto fd = qtomo::reference::tomogram_dense(e1, p, theta);
        for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(ff[k] - fd[k]));
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max pipeline-vs-dense difference %.3e (limit 1e-10)", worst);
  return {worst <= 1e-10, buf};
}

// 9. Symmetry suite + self-check mode exits 0.
Outcome criterion_9() {
  double mirror = 0.0;
  for (double q : {0.5, 0.9}) {
    const auto m = qtomo::compute_measure(64, qtomo::DeformationParams(q));
    for (int k = 0; k < 64; ++k) {
      mirror = std::max(mirror, std::abs(m.nodes[k] + m.nodes[63 - k]));
      mirror = std::max(mirror, std::abs(m.weights[k] - m.weights[63 - k]));
    }
  }

  double parity = 0.0;
  const qtomo::DeformationParams p(0.7);
  for (double x : {0.31, 0.77, 1.2}) {
    const auto plus = qtomo::eval_J(64, p, x);
    const auto minus = qtomo::eval_J(64, p, -x);
    for (int n = 0; n <= 64; ++n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      parity = std::max(parity, std::abs(minus.values[n] - sign * plus.values[n]) /
                                    std::max(std::abs(plus.values[n]), 1e-300));
    }
  }

  const auto m = qtomo::compute_measure(32, p);
  const auto stc = qtomo::make_coherent(cd{0.4, 0.1}, p, 32, 1.0);
  const auto pa = qtomo::tomogram_coherent(stc, 1.3, m);
  const auto pb = qtomo::tomogram_coherent(stc, 1.3 + 2.0 * pi, m);
  double periodicity = 0.0;
  for (int k = 0; k < 32; ++k) periodicity = std::max(periodicity, std::abs(pa[k] - pb[k]));

  const auto str = qtomo::make_coherent(0.6, p, 32, 1.0);
  const auto ra = qtomo::tomogram_coherent(str, 0.9, m);
  const auto rb = qtomo::tomogram_coherent(str, -0.9, m);
  double reflection = 0.0;
  for (int k = 0; k < 32; ++k) reflection = std::max(reflection, std::abs(ra[k] - rb[k]));

  const std::string cmd = "\"" + g_cli_path + "\" --mode check --q 0.5 --truncation 64 > /dev/null";
  const int rc = std::system(cmd.c_str());
  const bool check_ok = rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0;

  const bool pass = mirror <= 1e-12 && parity <= 1e-12 && periodicity <= 1e-12 &&
                    reflection <= 1e-12 && check_ok;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "mirror %.2e, parity %.2e, periodicity %.2e, reflection %.2e (limits 1e-12), "
                "check exit %s",
                mirror, parity, periodicity, reflection, check_ok ? "0" : "nonzero");
  return {pass, buf};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli> [criterion 1..9]\n", argv[0]);
    return 64;
  }
  g_cli_path = argv[1];
  int only = 0;
  if (argc > 2) only = std::atoi(argv[2]);

  struct Entry {
    int num;
    const char* name;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "algebra identity", criterion_1},
      {2, "deformed commutator", criterion_2},
      {3, "hermite limit", criterion_3},
      {4, "measure correctness", criterion_4},
      {5, "completeness", criterion_5},
      {6, "tomogram normalization", criterion_6},
      {7, "glauber limit", criterion_7},
      {8, "brute-force equivalence", criterion_8},
      {9, "symmetry suite + check mode", criterion_9},
  };

  int failed = 0;
  for (const auto& e : entries) {
    if (only != 0 && e.num != only) continue;
    const Outcome out = e.fn();
    std::printf("[%s] criterion %d: %s -- %s\n", out.pass ? "PASS" : "FAIL", e.num, e.name,
                out.detail.c_str());
    if (!out.pass) ++failed;
  }
  return failed;
}
