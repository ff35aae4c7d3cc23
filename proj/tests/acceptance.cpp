// Acceptance gate: end-to-end checks with pinned tolerances, one verdict
// line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance --cli <path-to-geomqm-binary>

#include "geomqm/bloch.hpp"
#include "geomqm/dynamics.hpp"
#include "geomqm/expectation.hpp"
#include "geomqm/hilbert.hpp"
#include "geomqm/interference.hpp"
#include "geomqm/spectral.hpp"
#include "geomqm/uncertainty.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace geomqm;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::string g_detail;

void verdict(const std::string& name, bool ok) {
  if (ok) {
    std::cout << "PASS " << name << "\n";
  } else {
    std::cout << "FAIL " << name;
    if (!g_detail.empty()) std::cout << " (" << g_detail << ")";
    std::cout << "\n";
    ++g_failures;
  }
  g_detail.clear();
}

bool note(bool ok, const std::string& detail) {
  if (!ok && g_detail.empty()) g_detail = detail;
  return ok;
}

Vector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss;
  Vector v(n);
  for (Eigen::Index k = 0; k < n; ++k) v(k) = Complex(gauss(rng), gauss(rng));
  return v;
}

PureState random_state(std::mt19937_64& rng, Eigen::Index n) {
  Vector v = random_vector(rng, n);
  while (v.norm() < 1e-6) v = random_vector(rng, n);
  return PureState(std::move(v));
}

HermitianOperator random_hermitian(std::mt19937_64& rng, Eigen::Index n) {
  Matrix m = random_vector(rng, n * n).reshaped(n, n);
  return HermitianOperator(0.5 * (m + m.adjoint().eval()));
}

std::vector<double> oracle_spectrum(const HermitianOperator& A) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(A.matrix(), Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(),
          es.eigenvalues().data() + es.eigenvalues().size()};
}

std::vector<double> distinct(std::vector<double> vals, double tol) {
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  for (double v : vals)
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  return out;
}

// --- qubit spectra, closed form vs search, 1000 cases < 5 s ---

bool qubit_spectra() {
  std::mt19937_64 rng(101);
  std::normal_distribution<double> gauss;
  auto start = Clock::now();
  bool ok = true;
  for (int it = 0; it < 1000 && ok; ++it) {
    PauliCoefficients a{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    spectral::QubitSpectrum closed = spectral::qubit_spectrum_closed_form(a);
    spectral::SearchConfig cfg;
    cfg.restarts = 8;
    cfg.seed = 9000 + static_cast<std::uint64_t>(it);
    auto points = spectral::find_critical_points(
        HermitianOperator(bloch::assemble(a)), cfg);
    ok = note(!points.empty(), "search returned no critical points");
    for (const auto& pt : points) {
      double d = std::min(std::abs(pt.value - closed.value_plus),
                          std::abs(pt.value - closed.value_minus));
      ok = ok && note(d <= 1e-8, "critical value off closed form by " +
                                     std::to_string(d));
    }
    if (closed.value_plus - closed.value_minus > 1e-6) {
      ok = ok && note(points.size() == 2, "missed one of two levels");
      if (points.size() == 2) {
        ok = ok && note(std::abs(points.front().value - closed.value_minus) <=
                            1e-8,
                        "lower level mismatch");
        ok = ok && note(std::abs(points.back().value - closed.value_plus) <=
                            1e-8,
                        "upper level mismatch");
      }
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return ok && note(secs < 5.0,
                    "took " + std::to_string(secs) + " s (budget 5 s)");
}

// --- full spectra for n = 2..8, 100 matrices < 60 s ---

bool dense_spectra() {
  std::mt19937_64 rng(202);
  auto start = Clock::now();
  bool ok = true;
  for (int it = 0; it < 100 && ok; ++it) {
    Eigen::Index n = 2 + (it % 7);
    HermitianOperator A = random_hermitian(rng, n);
    spectral::SearchConfig cfg;
    cfg.restarts = 20 * static_cast<int>(n);
    cfg.seed = 7000 + static_cast<std::uint64_t>(it);
    auto points = spectral::find_critical_points(A, cfg);
    std::vector<double> found;
    for (const auto& pt : points) found.push_back(pt.value);
    found = distinct(std::move(found), 1e-8);
    std::vector<double> expected = distinct(oracle_spectrum(A), 1e-8);
    ok = note(found.size() == expected.size(),
              "found " + std::to_string(found.size()) + " of " +
                  std::to_string(expected.size()) + " levels at n=" +
                  std::to_string(n));
    for (std::size_t k = 0; ok && k < found.size(); ++k)
      ok = note(std::abs(found[k] - expected[k]) <= 1e-8,
                "eigenvalue mismatch " +
                    std::to_string(std::abs(found[k] - expected[k])));
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return ok && note(secs < 60.0,
                    "took " + std::to_string(secs) + " s (budget 60 s)");
}

// --- bracket homomorphism on 10^4 samples ---

bool bracket_homomorphism() {
  std::mt19937_64 rng(303);
  bool ok = true;
  for (int it = 0; it < 10000 && ok; ++it) {
    Eigen::Index n = 2 + (it % 3);
    HermitianOperator A = random_hermitian(rng, n);
    HermitianOperator B = random_hermitian(rng, n);
    PureState psi = random_state(rng, n);
    Matrix comm =
        Complex(0, 1) * (A.matrix() * B.matrix() - B.matrix() * A.matrix());
    double direct =
        expectation::expectation(HermitianOperator(comm), psi);
    double bracket = expectation::poisson_bracket(A, B, psi);
    double err = std::abs(bracket - direct) / std::max(1.0, std::abs(direct));
    ok = note(err <= 1e-12, "relative deviation " + std::to_string(err));
  }
  return ok;
}

// --- Ehrenfest residual size and decay order ---

bool ehrenfest() {
  std::mt19937_64 rng(404);
  bool ok = true;
  // Operators are scaled to unit spectral norm so the dt^2 constant of the
  // central difference stays comparable across draws.
  auto normalized = [&rng](Eigen::Index n) {
    HermitianOperator raw = random_hermitian(rng, n);
    return HermitianOperator(raw.matrix() / raw.matrix().operatorNorm());
  };
  for (int it = 0; it < 100 && ok; ++it) {
    Eigen::Index n = 2 + (it % 2);
    HermitianOperator H = normalized(n);
    HermitianOperator A = normalized(n);
    PureState psi = random_state(rng, n);
    double r1 = dynamics::ehrenfest_residual(H, A, psi, 1e-3);
    ok = note(r1 <= 1e-5, "residual " + std::to_string(r1) + " at dt=1e-3");
    if (ok && r1 > 1e-9) {
      double r2 = dynamics::ehrenfest_residual(H, A, psi, 5e-4);
      ok = note(r2 <= r1 / 3.0,
                "halving dt shrank the residual only by " +
                    std::to_string(r1 / std::max(r2, 1e-300)) + "x");
    }
  }
  return ok;
}

// --- complex structure and compatibility ---

bool kaehler_structure() {
  std::mt19937_64 rng(505);
  bool ok = true;
  for (int it = 0; it < 1000 && ok; ++it) {
    Eigen::Index n = 2 + (it % 4);
    PureState psi1 = random_state(rng, n);
    PureState psi2 = random_state(rng, n);
    RealifiedState x1 = hilbert::realify(psi1);
    RealifiedState x2 = hilbert::realify(psi2);

    RealifiedState jj = hilbert::apply_complex_structure(
        hilbert::apply_complex_structure(x1));
    double jerr = (jj.q + x1.q).norm() + (jj.p + x1.p).norm();
    ok = note(jerr == 0.0, "J^2 differs from -I by " + std::to_string(jerr));

    Complex h = hilbert::hermitian_product(psi1, psi2);
    double g = h.real(), omega = h.imag();
    Complex h_j = hilbert::hermitian_product(
        psi1, hilbert::complexify(hilbert::apply_complex_structure(x2)));
    double scale = std::max(1.0, std::abs(h));
    ok = ok && note(std::abs(h_j.imag() - g) <= 1e-12 * scale,
                    "omega(X, JY) != g(X, Y)");
    Complex jh = hilbert::hermitian_product(
        hilbert::complexify(hilbert::apply_complex_structure(x1)), psi2);
    ok = ok && note(std::abs(jh.real() - omega) <= 1e-12 * scale,
                    "g(JX, Y) != omega(X, Y)");
  }
  return ok;
}

// --- uncertainty slacks, two routes, saturation ---

bool uncertainty_relations() {
  std::mt19937_64 rng(606);
  bool ok = true;
  for (int it = 0; it < 10000 && ok; ++it) {
    Eigen::Index n = 2 + (it % 3);
    HermitianOperator A = random_hermitian(rng, n);
    HermitianOperator B = random_hermitian(rng, n);
    PureState psi = random_state(rng, n);
    auto op = uncertainty::schrodinger_check(A, B, psi);
    double scale = std::max(1.0, op.varA * op.varB);
    ok = note(op.robertson_slack >= -1e-10 * scale, "negative Robertson slack");
    ok = ok && note(op.schrodinger_slack >= -1e-10 * scale,
                    "negative Schroedinger slack");
    auto tensor = uncertainty::tensor_path_check(A, B, psi);
    ok = ok &&
         note(std::abs(op.robertson_slack - tensor.robertson_slack) <=
                  1e-10 * scale,
              "tensor route diverges from the operator route");
    ok = ok &&
         note(std::abs(op.schrodinger_slack - tensor.schrodinger_slack) <=
                  1e-10 * scale,
              "tensor route diverges from the operator route");
  }
  Vector ground(2);
  ground << 1.0, 0.0;
  auto sat = uncertainty::schrodinger_check(
      HermitianOperator(bloch::pauli(1)), HermitianOperator(bloch::pauli(2)),
      PureState(ground));
  ok = ok && note(std::abs(sat.robertson_slack) <= 1e-12 &&
                      std::abs(sat.schrodinger_slack) <= 1e-12,
                  "sigma1/sigma2 saturation case has nonzero slack");
  return ok;
}

// --- Bloch chart two-path consistency ---

bool bloch_consistency() {
  std::mt19937_64 rng(707);
  std::normal_distribution<double> gauss;
  bool ok = true;
  for (int it = 0; it < 10000 && ok; ++it) {
    PauliCoefficients a{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    PauliCoefficients b{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    PureState psi = random_state(rng, 2);
    BlochState y = bloch::state_to_bloch(psi);
    HermitianOperator A(bloch::assemble(a)), B(bloch::assemble(b));

    double e_chart = bloch::pauli_expectation(a, y);
    double e_op = expectation::expectation(A, psi);
    ok = note(std::abs(e_chart - e_op) <= 1e-12 * std::max(1.0, std::abs(e_op)),
              "expectation differs between routes");

    double c_chart = bloch::commutator_function(a, b, y);
    double c_op = expectation::poisson_bracket(A, B, psi);
    ok = ok && note(std::abs(c_chart - c_op) <=
                        1e-12 * std::max(1.0, std::abs(c_op)),
                    "commutator differs between routes");

    double lam = bloch::bloch_tensor_eval(bloch::BlochTensorKind::Lambda_rho,
                                          a, b, y);
    double g = bloch::bloch_tensor_eval(bloch::BlochTensorKind::G_rho, a, b,
                                        y);
    ok = ok && note(std::abs(lam - c_chart) <=
                        1e-12 * std::max(1.0, std::abs(c_chart)),
                    "Lambda contraction misses the commutator");
    double anti = bloch::anticommutator_function(a, b, y);
    ok = ok && note(std::abs(g - anti) <=
                        1e-12 * std::max(1.0, std::abs(anti)),
                    "G contraction misses the anticommutator");
  }
  return ok;
}

// --- superposition purity ---

bool superposition_purity() {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> weight(0.02, 0.98);
  bool ok = true;
  int accepted = 0;
  for (int it = 0; it < 1000 && ok; ++it) {
    Eigen::Index n = 2 + (it % 3);
    DensityMatrix rho1 = DensityMatrix::projector(random_state(rng, n));
    DensityMatrix rho2 = DensityMatrix::projector(random_state(rng, n));
    interference::FiducialProjector P0 =
        interference::FiducialProjector::from_state(random_state(rng, n));
    try {
      DensityMatrix rho = interference::superpose(rho1, rho2, P0, weight(rng));
      ++accepted;
      const Matrix& m = rho.matrix();
      ok = note(std::abs(m.trace().real() - 1.0) <= 1e-12, "trace drift");
      ok = ok && note((m * m - m).cwiseAbs().maxCoeff() <= 1e-10,
                      "superposition is not pure");
    } catch (const FocalPointError&) {
      continue;
    }
  }
  ok = ok && note(accepted >= 900, "too many focal rejections: only " +
                                       std::to_string(accepted) + " accepted");

  Vector z(2), o(2), pl(2);
  z << 1.0, 0.0;
  o << 0.0, 1.0;
  pl << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  DensityMatrix out = interference::superpose(
      DensityMatrix::projector(PureState(z)),
      DensityMatrix::projector(PureState(o)),
      interference::FiducialProjector::from_state(PureState(pl)), 0.5);
  double worked =
      (out.matrix() - DensityMatrix::projector(PureState(pl)).matrix())
          .cwiseAbs()
          .maxCoeff();
  return ok && note(worked <= 1e-12,
                    "worked case off by " + std::to_string(worked));
}

// --- geodesic star structure ---

bool star_structure() {
  std::mt19937_64 rng(909);
  std::normal_distribution<double> gauss;
  auto random_point = [&] {
    Eigen::Vector3d v;
    do {
      v = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    return interference::SpherePoint(v.normalized());
  };
  bool ok = true;
  for (int it = 0; it < 500 && ok; ++it) {
    interference::SpherePoint s0 = random_point();
    interference::SpherePoint s = random_point();
    if ((s0.coords() + s.coords()).norm() < 1e-3) continue;
    interference::TangentVector v = interference::log_map(s0, s);
    interference::SpherePoint back = interference::exp_map(s0, v);
    ok = note((back.coords() - s.coords()).norm() <= 1e-10,
              "exp(log) round trip drifted");
    interference::SpherePoint doubled = interference::exp_map(
        s0, interference::TangentVector(s0, 2.0 * v.components));
    ok = ok && note((interference::star_compose(s0, s, s).coords() -
                     doubled.coords())
                            .norm() <= 1e-10,
                    "s star s differs from exp(2 log s)");
    ok = ok && note((interference::star_compose(s0, s, s0).coords() -
                     s.coords())
                            .norm() <= 1e-10,
                    "s0 is not neutral for star");
  }
  interference::SpherePoint north{Eigen::Vector3d(0, 0, 1)};
  interference::SpherePoint ex{Eigen::Vector3d(1, 0, 0)};
  interference::SpherePoint far{
      Eigen::Vector3d(0, std::sin(2.0 * M_PI / 3.0),
                      std::cos(2.0 * M_PI / 3.0))};
  Eigen::Vector3d chord =
      (ex.coords() + far.coords() - north.coords()).normalized();
  double gap =
      (interference::star_compose(north, ex, far).coords() - chord).norm();
  return ok && note(gap >= 0.1,
                    "star composition collapsed onto the chord rule");
}

// --- ray invariance across the API ---

bool ray_invariance() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> mag(0.1, 10.0);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * M_PI);
  bool ok = true;
  for (int c = 0; c < 20 && ok; ++c) {
    Eigen::Index n = 2 + (c % 3);
    HermitianOperator A = random_hermitian(rng, n);
    HermitianOperator B = random_hermitian(rng, n);
    PureState psi = random_state(rng, n);
    double e0 = expectation::expectation(A, psi);
    double pb0 = expectation::poisson_bracket(A, B, psi);
    double gp0 =
        expectation::projected_tensor_eval(expectation::ProjectedKind::G_P, A,
                                           B, psi);
    auto u0 = uncertainty::schrodinger_check(A, B, psi);
    for (int k = 0; k < 100 && ok; ++k) {
      Complex lambda = std::polar(mag(rng), arg(rng));
      PureState scaled(lambda * psi.amplitudes());
      double tol = 1e-12;
      ok = note(std::abs(expectation::expectation(A, scaled) - e0) <=
                    tol * std::max(1.0, std::abs(e0)),
                "expectation is not ray invariant");
      ok = ok && note(std::abs(expectation::poisson_bracket(A, B, scaled) -
                               pb0) <= tol * std::max(1.0, std::abs(pb0)),
                      "Poisson bracket is not ray invariant");
      ok = ok &&
           note(std::abs(expectation::projected_tensor_eval(
                             expectation::ProjectedKind::G_P, A, B, scaled) -
                         gp0) <= tol * std::max(1.0, std::abs(gp0)),
                "G_P is not ray invariant");
      auto u = uncertainty::schrodinger_check(A, B, scaled);
      ok = ok && note(std::abs(u.schrodinger_slack - u0.schrodinger_slack) <=
                          tol * std::max(1.0, std::abs(u0.schrodinger_slack)),
                      "Schroedinger slack is not ray invariant");
      if (n == 2) {
        BlochState y0 = bloch::state_to_bloch(psi);
        BlochState y = bloch::state_to_bloch(scaled);
        ok = ok && note(std::abs(y.y1 - y0.y1) + std::abs(y.y2 - y0.y2) +
                                std::abs(y.y3 - y0.y3) <= tol,
                        "Bloch chart is not ray invariant");
      }
    }
  }
  return ok;
}

// --- CLI determinism and golden scenarios ---

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool cli_golden(const std::string& cli) {
  namespace fs = std::filesystem;
  fs::path dir =
      fs::temp_directory_path() / ("geomqm-acceptance-" +
                                   std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const char* name, const char* text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };

  std::string spectrum = write("spectrum.json", R"({
    "task": "spectrum",
    "dimension": 2,
    "operators": {"sz": [[[1,0],[0,0]],[[0,0],[-1,0]]]},
    "parameters": {"operator": "sz", "seed": 7}
  })");
  std::string evolve = write("evolve.json", R"({
    "task": "evolve",
    "dimension": 2,
    "operators": {
      "h": [[[0,0],[1,0]],[[1,0],[0,0]]],
      "sz": [[[1,0],[0,0]],[[0,0],[-1,0]]]
    },
    "states": {"ground": [[1,0],[0,0]]},
    "parameters": {"hamiltonian": "h", "state": "ground",
                   "observables": ["sz"],
                   "times": [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]}
  })");
  std::string superpose = write("superpose.json", R"({
    "task": "superpose",
    "dimension": 2,
    "states": {
      "zero": [[1,0],[0,0]],
      "one": [[0,0],[1,0]],
      "plus": [[0.70710678118654752,0],[0.70710678118654752,0]]
    },
    "parameters": {"rho1": "zero", "rho2": "one", "fiducial": "plus",
                   "p1": 0.5}
  })");
  std::string bad = write("bad.json", R"({"task": "spectrum"})");

  bool ok = true;
  // byte-identical reruns for every golden scenario
  for (const std::string& path : {spectrum, evolve, superpose}) {
    CliResult a = run_cli(cli, "run '" + path + "'");
    CliResult b = run_cli(cli, "run '" + path + "'");
    ok = ok && note(a.status == 0, "run exited with status " +
                                       std::to_string(a.status));
    ok = ok && note(!a.out.empty() && a.out == b.out,
                    "reruns are not byte-identical for " + path);
  }

  CliResult spec = run_cli(cli, "run '" + spectrum + "'");
  if (ok) {
    nlohmann::json doc = nlohmann::json::parse(spec.out);
    auto values = doc["outputs"]["values"];
    ok = note(values.size() == 2 &&
                  std::abs(values[0].get<double>() + 1.0) <= 1e-9 &&
                  std::abs(values[1].get<double>() - 1.0) <= 1e-9,
              "spectrum golden values are not [-1, 1]");
  }

  std::string csv_path = (dir / "traj.csv").string();
  CliResult evo =
      run_cli(cli, "run '" + evolve + "' --csv '" + csv_path + "'");
  if (ok) {
    nlohmann::json doc = nlohmann::json::parse(evo.out);
    for (std::size_t k = 0; ok && k < doc["outputs"]["times"].size(); ++k) {
      double t = doc["outputs"]["times"][k].get<double>();
      double v = doc["outputs"]["values"][k][0].get<double>();
      ok = note(std::abs(v - std::cos(2.0 * t)) <= 1e-9,
                "Rabi trajectory misses cos(2t)");
    }
    std::ifstream csv(csv_path);
    std::string header;
    std::getline(csv, header);
    ok = ok && note(header == "t,e_sz", "CSV header mismatch: " + header);
  }

  CliResult sup = run_cli(cli, "run '" + superpose + "'");
  if (ok) {
    nlohmann::json doc = nlohmann::json::parse(sup.out);
    ok = note(doc["outputs"]["pure"].get<bool>(),
              "superposition golden output is not pure");
  }

  CliResult invalid = run_cli(cli, "run '" + bad + "'");
  ok = ok && note(invalid.status == 2,
                  "invalid scenario exited with " +
                      std::to_string(invalid.status) + ", expected 2");
  CliResult validate = run_cli(cli, "validate '" + spectrum + "'");
  ok = ok && note(validate.status == 0, "validate rejected a good scenario");

  std::error_code ec;
  fs::remove_all(dir, ec);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int k = 1; k + 1 < argc; ++k)
    if (std::string(argv[k]) == "--cli") cli = argv[k + 1];
  if (cli.empty()) {
    std::cerr << "usage: acceptance --cli <path-to-geomqm-binary>\n";
    return 2;
  }

  verdict("qubit-spectra-closed-form-vs-search", qubit_spectra());
  verdict("dense-spectra-n2-to-n8", dense_spectra());
  verdict("poisson-bracket-homomorphism", bracket_homomorphism());
  verdict("ehrenfest-residual-second-order", ehrenfest());
  verdict("complex-structure-and-compatibility", kaehler_structure());
  verdict("uncertainty-slacks-two-routes", uncertainty_relations());
  verdict("bloch-two-path-consistency", bloch_consistency());
  verdict("superposition-purity", superposition_purity());
  verdict("geodesic-star-structure", star_structure());
  verdict("ray-invariance", ray_invariance());
  verdict("cli-determinism-and-golden-runs", cli_golden(cli));

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
