#pragma once

// The spectrum of a Hermitian operator recovered as the critical points and
// critical values of its expectation-value function, by projected-gradient
// search on the unit sphere with Rayleigh-quotient refinement inside each
// basin. A dense eigensolver is used only as the test oracle, never inside
// the search.

#include "geomqm/types.hpp"

#include <cstdint>
#include <vector>

namespace geomqm::spectral {

struct CriticalPoint {
  PureState state;        // unit norm
  double value;           // e_A at the state (the eigenvalue)
  double residual;        // ||de_A||_2 at the state
  int multiplicity_hint;  // number of merged converged runs, not eigenspace dim
};

struct SearchConfig {
  int restarts = 40;
  double step = 0.5;       // initial line-search step
  double tol = 1e-10;      // gradient-norm convergence threshold
  int max_iters = 20000;
  std::uint64_t seed = 0;
  double dedup_value_factor = 10.0;  // values within factor*tol merge
  double dedup_overlap = 0.99;       // |<psi_i|psi_j>| above this merges
};

// All critical values of e_A, sorted ascending. Ascent runs are distributed
// over deflation levels: level k searches the orthogonal complement of the
// eigenvectors found so far, so interior (saddle) critical points are
// reached as maxima of the compressed function.
std::vector<CriticalPoint> find_critical_points(const HermitianOperator& A,
                                                const SearchConfig& cfg);

struct QubitSpectrum {
  double value_plus;   // a0 + |a_vec|
  double value_minus;  // a0 - |a_vec|
  bool degenerate;     // vector part is zero: every pure state is critical
  // Critical Bloch points +-(a1,a2,a3)/(2|a_vec|); zero when degenerate.
  Eigen::Vector3d y_plus;
  Eigen::Vector3d y_minus;
};

// Lagrange-multiplier solution on the pure sphere for a 2x2 observable.
QubitSpectrum qubit_spectrum_closed_form(const PauliCoefficients& a);

bool is_critical(const HermitianOperator& A, const PureState& psi, double tol);

}  // namespace geomqm::spectral
