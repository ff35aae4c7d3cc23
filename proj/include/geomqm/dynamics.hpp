#pragma once

// Unitary Schroedinger evolution (hbar = 1) and its shadow on expectation
// values: trajectories e_A(psi(t)) and the finite-difference check of
// d/dt e_A = e_{[H,A]}.

#include "geomqm/types.hpp"

#include <vector>

namespace geomqm::dynamics {

struct Trajectory {
  std::vector<double> times;
  // values[k][j] = e_{A_j}(psi(t_k))
  std::vector<std::vector<double>> values;
};

// exp(-iHt) psi0 via eigendecomposition of H; exactly norm-preserving up to
// rounding.
PureState evolve_state(const HermitianOperator& H, const PureState& psi0,
                       double t);

// Norm-preserving Cayley (midpoint) stepper. Second-order in dt; kept as
// the time-stepping counterpart to the exact propagator for the
// convergence-order tests.
PureState evolve_state_cayley(const HermitianOperator& H,
                              const PureState& psi0, double t, int steps);

Trajectory expectation_trajectory(
    const HermitianOperator& H,
    const std::vector<HermitianOperator>& observables, const PureState& psi0,
    const std::vector<double>& times);

// |central difference of e_A along the flow - e_{[H,A]}(psi)|; O(dt^2).
double ehrenfest_residual(const HermitianOperator& H,
                          const HermitianOperator& A, const PureState& psi,
                          double dt);

// Closed-form rotation of the Bloch vector about (h1,h2,h3) at angular rate
// 2|h|; h0 only shifts the global phase and drops out.
BlochState bloch_evolve(const PauliCoefficients& h, const BlochState& y0,
                        double t);

}  // namespace geomqm::dynamics
