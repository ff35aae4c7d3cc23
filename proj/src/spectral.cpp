#include "geomqm/spectral.hpp"

#include "geomqm/expectation.hpp"

#include <algorithm>
#include <cmath>

namespace geomqm::spectral {

namespace {

// Counter-based generator: every draw is a pure function of (seed, stream,
// counter), so restarts can run in any order (or concurrently) and still
// produce identical results.
struct CounterRng {
  std::uint64_t seed;
  std::uint64_t stream;
  std::uint64_t counter = 0;

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t next_u64() {
    return splitmix64(splitmix64(seed ^ splitmix64(stream)) + counter++);
  }

  double uniform() {  // in (0, 1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
};

Vector random_unit_vector(CounterRng& rng, Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index k = 0; k < n; ++k)
    v(k) = Complex(rng.normal(), rng.normal());
  return v / v.norm();
}

struct Run {
  Vector state;  // unit norm
  double value = 0.0;
  bool converged = false;
};

// Projected-gradient ascent of the Rayleigh quotient restricted to the unit
// sphere intersected with the orthogonal complement of `basis` (n x k).
// Retraction is plain normalization; Armijo backtracking with factor 1/2.
Run ascend(const Matrix& A, const Matrix& basis, Vector psi,
           const SearchConfig& cfg) {
  auto deflate = [&](Vector v) -> Vector {
    if (basis.cols() > 0) v -= basis * (basis.adjoint() * v);
    return v;
  };

  psi = deflate(psi);
  if (psi.norm() < 1e-12) return {psi, 0.0, false};
  psi.normalize();

  auto tangent_gradient_norm = [&](const Vector& v, double value) {
    Vector grad = deflate(A * v - value * v);
    grad -= v * v.dot(grad);
    return grad.norm();
  };

  // Phase 1: projected-gradient ascent down to a coarse basin tolerance.
  // Plain normalization retraction cannot reliably push the gradient below
  // the rounding plateau (~1e-10 at unit scale), so the sharp tolerance is
  // left to the refinement phase.
  const double coarse = std::max(cfg.tol, 1e-6);
  double step = cfg.step;
  double value = psi.dot(A * psi).real();
  bool in_basin = false;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    Vector grad = deflate(A * psi - value * psi);
    grad -= psi * psi.dot(grad);
    double gnorm = grad.norm();
    if (2.0 * gnorm <= coarse) {  // ||de_A|| = 2||A psi - e psi|| on the sphere
      in_basin = true;
      break;
    }
    // Backtracking line search; never decreases the value.
    bool accepted = false;
    while (step > 1e-16) {
      Vector trial = deflate(psi + step * grad);
      trial.normalize();
      double trial_value = trial.dot(A * trial).real();
      if (trial_value >= value + 1e-4 * step * gnorm * gnorm) {
        psi = std::move(trial);
        value = trial_value;
        step = std::min(step * 1.5, 1.0);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // stalled at line-search floor
  }
  if (!in_basin) return {std::move(psi), value, false};

  // Phase 2: Rayleigh-quotient iteration inside the basin. Cubic
  // convergence takes the residual to rounding level in a few solves; each
  // iterate is deflated so the run stays in the working subspace.
  bool converged = 2.0 * tangent_gradient_norm(psi, value) <= cfg.tol;
  for (int k = 0; k < 40 && !converged; ++k) {
    Matrix shifted = A - value * Matrix::Identity(A.rows(), A.cols());
    Vector next = shifted.colPivHouseholderQr().solve(psi);
    next = deflate(next);
    double nn = next.norm();
    if (!(nn > 0.0) || !next.allFinite()) break;
    next /= nn;
    double next_value = next.dot(A * next).real();
    if (!std::isfinite(next_value)) break;
    psi = std::move(next);
    value = next_value;
    converged = 2.0 * tangent_gradient_norm(psi, value) <= cfg.tol;
  }
  return {std::move(psi), value, converged};
}

}  // namespace

std::vector<CriticalPoint> find_critical_points(const HermitianOperator& A,
                                                const SearchConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.tol <= 0.0)
    throw DomainError("invalid search configuration");
  const Eigen::Index n = A.dim();
  const Matrix& M = A.matrix();
  const int runs_per_level =
      std::max(1, cfg.restarts / static_cast<int>(n));

  std::vector<Run> converged_runs;
  Matrix basis(n, 0);
  std::uint64_t stream = 0;

  for (Eigen::Index level = 0; level < n && basis.cols() < n; ++level) {
    std::vector<Run> level_runs;
    for (int r = 0; r < runs_per_level; ++r) {
      CounterRng rng{cfg.seed, stream++};
      Run run = ascend(M, basis, random_unit_vector(rng, n), cfg);
      if (run.converged) level_runs.push_back(run);
    }
    // Extend the deflation basis with every genuinely new eigendirection
    // this level produced, best value first.
    std::sort(level_runs.begin(), level_runs.end(),
              [](const Run& a, const Run& b) { return a.value > b.value; });
    for (const Run& run : level_runs) {
      Vector u = run.state;
      if (basis.cols() > 0) u -= basis * (basis.adjoint() * u);
      if (u.norm() < 0.5) continue;
      u.normalize();
      double theta = u.dot(M * u).real();
      if ((M * u - theta * u).norm() > 10.0 * cfg.tol) continue;
      basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
      basis.col(basis.cols() - 1) = u;
    }
    converged_runs.insert(converged_runs.end(), level_runs.begin(),
                          level_runs.end());
  }

  // Merge runs that landed in the same basin.
  std::sort(converged_runs.begin(), converged_runs.end(),
            [](const Run& a, const Run& b) { return a.value < b.value; });
  std::vector<CriticalPoint> points;
  std::vector<Run> representatives;
  for (const Run& run : converged_runs) {
    bool merged = false;
    for (std::size_t i = 0; i < representatives.size(); ++i) {
      if (std::abs(run.value - representatives[i].value) <=
              cfg.dedup_value_factor * cfg.tol &&
          std::abs(representatives[i].state.dot(run.state)) >
              cfg.dedup_overlap) {
        ++points[i].multiplicity_hint;
        merged = true;
        break;
      }
    }
    if (!merged) {
      PureState state{run.state};
      Covector grad = expectation::differential(A, state);
      points.push_back(CriticalPoint{state, run.value, grad.norm(), 1});
      representatives.push_back(run);
    }
  }
  std::sort(points.begin(), points.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) {
              return a.value < b.value;
            });
  return points;
}

QubitSpectrum qubit_spectrum_closed_form(const PauliCoefficients& a) {
  double r = a.vector_norm();
  QubitSpectrum out;
  out.value_plus = a.a0 + r;
  out.value_minus = a.a0 - r;
  out.degenerate = (r == 0.0);
  if (out.degenerate) {
    out.y_plus.setZero();
    out.y_minus.setZero();
  } else {
    Eigen::Vector3d dir(a.a1, a.a2, a.a3);
    out.y_plus = dir / (2.0 * r);
    out.y_minus = -out.y_plus;
  }
  return out;
}

bool is_critical(const HermitianOperator& A, const PureState& psi,
                 double tol) {
  return expectation::differential(A, psi).norm() <= tol;
}

}  // namespace geomqm::spectral
