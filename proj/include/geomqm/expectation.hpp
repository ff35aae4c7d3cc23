#pragma once

// Expectation-value functions e_A = <psi|A psi>/<psi|psi>, their
// differentials on the realified space, the quantum Poisson bracket, the
// symmetric (covariance) bracket, and the projectable tensors G_P, Omega_P
// evaluated both through operator algebra and through coordinate
// contraction.

#include "geomqm/types.hpp"

namespace geomqm::expectation {

double expectation(const HermitianOperator& A, const PureState& psi);

// Differential of e_A at realify(psi): the (dq, dp) split of
// w = 2 (A psi - e_A(psi) psi) / <psi|psi>. Vanishes exactly at
// eigenvectors.
Covector differential(const HermitianOperator& A, const PureState& psi);

// {e_A, e_B}(psi) = e_{[A,B]}(psi) with [A,B] = i(AB - BA).
double poisson_bracket(const HermitianOperator& A, const HermitianOperator& B,
                       const PureState& psi);

// cov(A,B) = e_{AB+BA}/2 - e_A e_B; cov(A,A) is the variance
// e_{A^2} - e_A^2.
double covariance(const HermitianOperator& A, const HermitianOperator& B,
                  const PureState& psi);

enum class ProjectedKind { G_P, Omega_P };

// Projectable tensors contracted with de_A, de_B. Operator-algebra route:
// G_P gives the covariance bracket, Omega_P the Poisson bracket. Both are
// ray-invariant.
double projected_tensor_eval(ProjectedKind kind, const HermitianOperator& A,
                             const HermitianOperator& B, const PureState& psi);

// Coordinate route: contracts <psi|psi> G - Gamma(x)Gamma - Delta(x)Delta
// (resp. <psi|psi> Omega - Delta(x)Gamma - Gamma(x)Delta) with arbitrary
// one-forms at realify(psi). The overall constants (1/4 and -1/2) are fixed
// once so that on differentials of expectation functions the two routes
// coincide; the unit tests assert this on a basis and on random inputs.
double projected_tensor_eval_coordinates(ProjectedKind kind,
                                         const Covector& alpha,
                                         const Covector& beta,
                                         const PureState& psi);

}  // namespace geomqm::expectation
