// Command-line front end: tomogram sweeps over theta, wavefunction and
// measure dumps, and a self-check mode running the invariant battery.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid configuration,
// 3 math-domain error, 4 failed self-check.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtomo/deformation.hpp"
#include "qtomo/measure.hpp"
#include "qtomo/selfcheck.hpp"
#include "qtomo/tomogram.hpp"
#include "qtomo/version.hpp"

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string mode;
  double q = 0.5;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  int fock_n = 0;
  int truncation = 64;
  double theta_start = 0.0;
  double theta_end = 2.0 * std::numbers::pi;
  int theta_steps = 64;
  double tol = 1e-10;
  std::string output_path = "-";
  std::string format = "csv";
};

std::vector<double> theta_grid(const RunConfig& cfg) {
  std::vector<double> thetas(static_cast<size_t>(cfg.theta_steps));
  if (cfg.theta_steps == 1) {
    thetas[0] = cfg.theta_start;
    return thetas;
  }
  const double step = (cfg.theta_end - cfg.theta_start) / (cfg.theta_steps - 1);
  for (int i = 0; i < cfg.theta_steps; ++i) thetas[i] = cfg.theta_start + i * step;
  thetas.back() = cfg.theta_end;  // endpoint inclusive, exactly
  return thetas;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_grid_csv(const qtomo::TomogramGrid& g, std::ostream& os) {
  os << "theta,x,p,w,omega_density\n";
  const size_t n = g.nodes.size();
  for (size_t t = 0; t < g.theta_values.size(); ++t) {
    for (size_t k = 0; k < n; ++k) {
      os << fmt(g.theta_values[t]) << ',' << fmt(g.nodes[k]) << ','
         << fmt(g.probabilities[t * n + k]) << ',' << fmt(g.weights[k]) << ','
         << fmt(g.densities[t * n + k]) << '\n';
    }
  }
}

json grid_json(const RunConfig& cfg, const qtomo::TomogramGrid& g, double tail_bound) {
  json meta;
  meta["mode"] = cfg.mode;
  meta["q"] = cfg.q;
  meta["alpha_re"] = cfg.alpha_re;
  meta["alpha_im"] = cfg.alpha_im;
  meta["fock_n"] = cfg.fock_n;
  meta["truncation"] = cfg.truncation;
  meta["theta_start"] = cfg.theta_start;
  meta["theta_end"] = cfg.theta_end;
  meta["theta_steps"] = cfg.theta_steps;
  meta["tol"] = cfg.tol;
  meta["tail_bound"] = tail_bound;
  meta["version"] = qtomo::version;

  const size_t n = g.nodes.size();
  std::vector<double> theta, x, p, w, density;
  for (size_t t = 0; t < g.theta_values.size(); ++t) {
    for (size_t k = 0; k < n; ++k) {
      theta.push_back(g.theta_values[t]);
      x.push_back(g.nodes[k]);
      p.push_back(g.probabilities[t * n + k]);
      w.push_back(g.weights[k]);
      density.push_back(g.densities[t * n + k]);
    }
  }
  json data;
  data["theta"] = theta;
  data["x"] = x;
  data["p"] = p;
  data["w"] = w;
  data["omega_density"] = density;
  return json{{"meta", meta}, {"data", data}};
}

int write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream os(cfg.output_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file '" << cfg.output_path << "'\n";
    return 1;
  }
  os << text;
  os.flush();
  if (!os.good()) {
    std::cerr << "error: failed writing to '" << cfg.output_path << "'\n";
    return 1;
  }
  return 0;
}

int run_tomogram(const RunConfig& cfg) {
  const qtomo::DeformationParams p(cfg.q);
  const auto measure = qtomo::compute_measure(cfg.truncation, p);
  const auto thetas = theta_grid(cfg);

  qtomo::TomogramGrid grid;
  double tail_bound = 0.0;
  if (cfg.mode == "tomogram-coherent") {
    const auto state = qtomo::make_coherent({cfg.alpha_re, cfg.alpha_im}, p,
                                            cfg.truncation, cfg.tol);
    tail_bound = state.tail_bound;
    grid = qtomo::coherent_grid(state, thetas, measure);
  } else {
    grid = qtomo::fock_grid(cfg.fock_n, thetas, measure);
  }

  if (cfg.format == "csv") {
    std::ostringstream ss;
    write_grid_csv(grid, ss);
    return write_output(cfg, ss.str());
  }
  return write_output(cfg, grid_json(cfg, grid, tail_bound).dump(2) + "\n");
}

int run_wavefunction(const RunConfig& cfg) {
  const qtomo::DeformationParams p(cfg.q);
  const auto measure = qtomo::compute_measure(cfg.truncation, p);
  const auto thetas = theta_grid(cfg);

  std::ostringstream ss;
  if (cfg.format == "csv") {
    ss << "theta,x,psi_re,psi_im,w\n";
    for (double theta : thetas) {
      const auto psi = qtomo::eval_psi(cfg.fock_n, theta, measure);
      for (int k = 0; k < measure.truncation; ++k) {
        ss << fmt(theta) << ',' << fmt(measure.nodes[k]) << ','
           << fmt(psi.values[k].real()) << ',' << fmt(psi.values[k].imag()) << ','
           << fmt(measure.weights[k]) << '\n';
      }
    }
    return write_output(cfg, ss.str());
  }

  json meta;
  meta["mode"] = cfg.mode;
  meta["q"] = cfg.q;
  meta["fock_n"] = cfg.fock_n;
  meta["truncation"] = cfg.truncation;
  meta["theta_start"] = cfg.theta_start;
  meta["theta_end"] = cfg.theta_end;
  meta["theta_steps"] = cfg.theta_steps;
  meta["version"] = qtomo::version;
  std::vector<double> theta, x, re, im, w;
  for (double th : thetas) {
    const auto psi = qtomo::eval_psi(cfg.fock_n, th, measure);
    for (int k = 0; k < measure.truncation; ++k) {
      theta.push_back(th);
      x.push_back(measure.nodes[k]);
      re.push_back(psi.values[k].real());
      im.push_back(psi.values[k].imag());
      w.push_back(measure.weights[k]);
    }
  }
  json data;
  data["theta"] = theta;
  data["x"] = x;
  data["psi_re"] = re;
  data["psi_im"] = im;
  data["w"] = w;
  return write_output(cfg, json{{"meta", meta}, {"data", data}}.dump(2) + "\n");
}

int run_measure_dump(const RunConfig& cfg) {
  const qtomo::DeformationParams p(cfg.q);
  const auto measure = qtomo::compute_measure(cfg.truncation, p);
  if (cfg.format == "csv") {
    std::ostringstream ss;
    qtomo::write_measure_csv(measure, ss);
    return write_output(cfg, ss.str());
  }
  json meta;
  meta["mode"] = cfg.mode;
  meta["q"] = cfg.q;
  meta["truncation"] = cfg.truncation;
  meta["version"] = qtomo::version;
  json data;
  data["k"] = json::array();
  data["x"] = json::array();
  data["w"] = json::array();
  for (int k = 0; k < measure.truncation; ++k) {
    data["k"].push_back(k);
    data["x"].push_back(measure.nodes[k]);
    data["w"].push_back(measure.weights[k]);
  }
  return write_output(cfg, json{{"meta", meta}, {"data", data}}.dump(2) + "\n");
}

int run_check(const RunConfig& cfg) {
  const auto report = qtomo::run_self_check(cfg.q, cfg.truncation);
  qtomo::print_report(report, std::cout);
  return report.all_pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"q-deformed oscillator quadratures and optical tomograms"};
  app.add_option("--mode", cfg.mode,
                 "tomogram-coherent | tomogram-fock | wavefunction | measure-dump | check")
      ->required();
  app.add_option("--q", cfg.q, "deformation parameter, in (0, 1]")->required();
  app.add_option("--alpha-re", cfg.alpha_re, "Re(alpha) for coherent states");
  app.add_option("--alpha-im", cfg.alpha_im, "Im(alpha) for coherent states");
  app.add_option("--fock-n", cfg.fock_n, "Fock index for fock/wavefunction modes");
  app.add_option("--truncation", cfg.truncation, "Fock-space truncation N (default 64)");
  app.add_option("--theta-start", cfg.theta_start, "first local-oscillator phase");
  app.add_option("--theta-end", cfg.theta_end, "last phase (grid is endpoint inclusive)");
  app.add_option("--theta-steps", cfg.theta_steps, "number of phases (default 64)");
  app.add_option("--tol", cfg.tol, "coherent-state tail tolerance (default 1e-10)");
  app.add_option("--output", cfg.output_path, "output file, '-' for stdout");
  app.add_option("--format", cfg.format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool known_mode = cfg.mode == "tomogram-coherent" || cfg.mode == "tomogram-fock" ||
                          cfg.mode == "wavefunction" || cfg.mode == "measure-dump" ||
                          cfg.mode == "check";
  if (!known_mode) {
    std::cerr << "error: unknown mode '" << cfg.mode << "'\n";
    return 2;
  }
  if (!(cfg.q > 0.0) || cfg.q > 1.0) {
    std::cerr << "error: q must lie in (0, 1]\n";
    return 2;
  }
  if (cfg.truncation < 1) {
    std::cerr << "error: truncation must be >= 1\n";
    return 2;
  }
  if (cfg.theta_steps < 1) {
    std::cerr << "error: theta-steps must be >= 1\n";
    return 2;
  }
  if (!(cfg.tol > 0.0)) {
    std::cerr << "error: tol must be positive\n";
    return 2;
  }
  if (cfg.format != "csv" && cfg.format != "json") {
    std::cerr << "error: format must be csv or json\n";
    return 2;
  }
  if ((cfg.mode == "tomogram-fock" || cfg.mode == "wavefunction") &&
      (cfg.fock_n < 0 || cfg.fock_n >= cfg.truncation)) {
    std::cerr << "error: fock-n must satisfy 0 <= n < truncation\n";
    return 2;
  }

  try {
    if (cfg.mode == "check") return run_check(cfg);
    if (cfg.mode == "measure-dump") return run_measure_dump(cfg);
    if (cfg.mode == "wavefunction") return run_wavefunction(cfg);
    return run_tomogram(cfg);
  } catch (const qtomo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
