#pragma once

// Realification of a finite-dimensional complex Hilbert space: the complex
// structure J, the Hermitian product split into its metric and symplectic
// parts, the contravariant tensors G and Omega, and the Euler fields
// (dilation and phase generators) whose foliation quotients to the
// projective space.

#include "geomqm/types.hpp"

#include <utility>

namespace geomqm::hilbert {

// q_k = Re psi_k, p_k = Im psi_k.
RealifiedState realify(const PureState& psi);

// Inverse of realify: psi_k = q_k + i p_k.
PureState complexify(const RealifiedState& x);

// <psi1|psi2>, conjugate-linear in the first argument. Real part is
// g(X_psi1, X_psi2), imaginary part omega(X_psi1, X_psi2).
Complex hermitian_product(const PureState& psi1, const PureState& psi2);

// J(q, p) = (-p, q), i.e. multiplication by i in the split chart. J^2 = -I.
RealifiedState apply_complex_structure(const RealifiedState& x);

// J on the components of a one-form's metric-dual vector; same formula.
Covector apply_complex_structure(const Covector& alpha);

struct EulerFields {
  RealifiedState delta;  // dilation generator, components (q, p)
  RealifiedState gamma;  // phase generator, components (p, -q)
};

EulerFields euler_fields(const RealifiedState& x);

// Closed-form flows of the Euler fields: scaling by e^s and phase rotation
// psi -> e^{-it} psi.
RealifiedState dilation_flow(const RealifiedState& x, double s);
RealifiedState phase_flow(const RealifiedState& x, double t);

enum class ContravariantKind { G, Omega };

// G = sum_k (d/dq^k (x) d/dq^k + d/dp_k (x) d/dp_k) contracted with two
// one-forms; Omega = sum_k d/dq^k ^ d/dp_k likewise.
double contravariant_eval(ContravariantKind kind, const Covector& alpha,
                          const Covector& beta);

// Pairing alpha(v) of a one-form with a tangent vector.
double pair(const Covector& alpha, const RealifiedState& v);

}  // namespace geomqm::hilbert
