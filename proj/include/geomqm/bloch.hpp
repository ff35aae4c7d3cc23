#pragma once

// Two-level calculus: Pauli decomposition, y-coordinates of 2x2 density
// matrices, the pure sphere and mixed ball, and the closed-form bracket
// functions with their coordinate tensors.

#include "geomqm/types.hpp"

namespace geomqm::bloch {

// Standard Pauli basis, sigma3 = diag(1, -1).
const Matrix& pauli(int j);  // j in 0..3

Matrix assemble(const PauliCoefficients& a);
PauliCoefficients decompose(const HermitianOperator& A);  // 2x2 only

BlochState state_to_bloch(const PureState& psi);
BlochState density_to_bloch(const DensityMatrix& rho);
DensityMatrix bloch_to_density(const BlochState& y);

// e_A(y) = a0 + 2(a1 y1 + a2 y2 + a3 y3).
double pauli_expectation(const PauliCoefficients& a, const BlochState& y);

// e_{[A,B]}(y) with [A,B] = i(AB - BA).
double commutator_function(const PauliCoefficients& a,
                           const PauliCoefficients& b, const BlochState& y);

// e_{A o B}(y) with A o B = AB + BA.
double anticommutator_function(const PauliCoefficients& a,
                               const PauliCoefficients& b,
                               const BlochState& y);

enum class BlochTensorKind { G_rho, Lambda_rho };

// Coordinate-tensor contraction with the differentials of e_A, e_B taken as
// functions of all four y's (the y0 = 1/2 constraint is applied only after
// contraction). Normalization constants are fixed so the contractions
// reproduce anticommutator_function / commutator_function exactly; the unit
// tests pin them on a basis.
double bloch_tensor_eval(BlochTensorKind kind, const PauliCoefficients& a,
                         const PauliCoefficients& b, const BlochState& y);

// Positivity of the assembled rho: eigenvalues are 1/2 +- |y_vec|, so the
// ball radius is 1/2.
bool mixed_state_contains(double y0, double y1, double y2, double y3);

}  // namespace geomqm::bloch
